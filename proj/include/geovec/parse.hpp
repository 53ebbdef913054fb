#pragma once

#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "geovec/homspace.hpp"
#include "geovec/inner_product.hpp"
#include "geovec/lie_algebra.hpp"

namespace geovec {

struct ParseError : std::runtime_error {
    int line;
    ParseError(int line_, const std::string& what)
        : std::runtime_error("line " + std::to_string(line_) + ": " + what), line(line_) {}
};

struct ParsedModel {
    LieAlgebra<Rat> algebra{1};
    std::optional<InnerProduct<Rat>> metric;
    std::optional<ReductiveSpace<Rat>> reductive;
};

namespace detail {

inline std::vector<std::string> tokens(const std::string& line) {
    std::vector<std::string> out;
    std::istringstream is(line);
    std::string t;
    while (is >> t) {
        if (t[0] == '#') break;
        out.push_back(t);
    }
    return out;
}

inline Rat need_rat(const std::string& s, int line) {
    auto q = parse_rat(s);
    if (!q) throw ParseError(line, "expected a rational or decimal literal, got '" + s + "'");
    return *q;
}

}  // namespace detail

// Text format:
//   algebra <name> dim <n>
//   bracket <i> <j> -> <k> <coeff>     (1-based, antisymmetric pair implied)
//   metric gram | metric lower         (followed by n rows of n entries)
//   metric diag <v1> ... <vn>
//   metric killing                     (bi-invariant -1/2 B)
//   metric rank1 base=<killing|gram> V=<v1 .. vn> alpha=<a>
//   hsubalgebra / mcomplement          (followed by spanning rows)
//   mmetric gram                       (optional metric on m-coordinates)
// '#' starts a comment. The algebra is Jacobi-checked and the metric
// positive-definiteness gate runs automatically.
inline ParsedModel parse_input(std::istream& in) {
    std::string line;
    int lineno = 0;
    std::optional<LieAlgebra<Rat>> algebra;
    std::optional<Mat<Rat>> gram;
    std::optional<Mat<Rat>> frame;  // when given as `metric lower`
    std::vector<std::pair<std::vector<int>, Rat>> brackets;
    std::vector<std::vector<int>> seen;
    std::vector<Vec<Rat>> h_rows, m_rows;
    std::optional<Mat<Rat>> m_gram;
    bool want_killing = false;
    struct Rank1 {
        bool base_killing = true;
        Vec<Rat> V;
        Rat alpha;
    };
    std::optional<Rank1> rank1;

    enum class Section { none, gram_rows, lower_rows, h_rows, m_rows, mgram_rows };
    Section section = Section::none;
    int rows_needed = 0;
    std::vector<Vec<Rat>> row_buf;

    auto flush_rows = [&]() {
        if (section == Section::none) return;
        if (static_cast<int>(row_buf.size()) != rows_needed)
            throw ParseError(lineno, "section ended after " + std::to_string(row_buf.size()) +
                                         " rows, expected " + std::to_string(rows_needed));
        switch (section) {
            case Section::gram_rows:
            case Section::lower_rows:
            case Section::mgram_rows: {
                Mat<Rat> M(rows_needed, static_cast<int>(row_buf[0].size()));
                for (int i = 0; i < M.rows; ++i)
                    for (int j = 0; j < M.cols; ++j) M(i, j) = row_buf[i][j];
                if (section == Section::gram_rows) gram = M;
                else if (section == Section::lower_rows) frame = M;
                else m_gram = M;
                break;
            }
            case Section::h_rows: h_rows = row_buf; break;
            case Section::m_rows: m_rows = row_buf; break;
            case Section::none: break;
        }
        section = Section::none;
        row_buf.clear();
    };

    while (std::getline(in, line)) {
        ++lineno;
        auto toks = detail::tokens(line);
        if (toks.empty()) continue;

        if (section != Section::none && static_cast<int>(row_buf.size()) < rows_needed) {
            // row continuation of the active section
            int want = section == Section::mgram_rows ? rows_needed : (algebra ? algebra->dim() : 0);
            Vec<Rat> row;
            for (const auto& t : toks) row.push_back(detail::need_rat(t, lineno));
            if (static_cast<int>(row.size()) != want)
                throw ParseError(lineno, "expected a row of length " + std::to_string(want));
            row_buf.push_back(std::move(row));
            if (static_cast<int>(row_buf.size()) == rows_needed) flush_rows();
            continue;
        }

        const std::string& kw = toks[0];
        if (kw == "algebra") {
            if (toks.size() != 4 || toks[2] != "dim") throw ParseError(lineno, "expected: algebra <name> dim <n>");
            int n = std::stoi(toks[3]);
            if (n <= 0) throw ParseError(lineno, "dimension must be positive");
            algebra = LieAlgebra<Rat>(n, toks[1]);
        } else if (kw == "bracket") {
            if (!algebra) throw ParseError(lineno, "bracket before algebra header");
            if (toks.size() != 6 || toks[3] != "->")
                throw ParseError(lineno, "expected: bracket <i> <j> -> <k> <coeff>");
            int i = std::stoi(toks[1]) - 1, j = std::stoi(toks[2]) - 1, k = std::stoi(toks[4]) - 1;
            int n = algebra->dim();
            if (i < 0 || i >= n || j < 0 || j >= n || k < 0 || k >= n)
                throw ParseError(lineno, "bracket index out of range");
            if (i == j) throw ParseError(lineno, "bracket of a vector with itself must vanish");
            for (const auto& s : seen)
                if ((s[0] == i && s[1] == j && s[2] == k) || (s[0] == j && s[1] == i && s[2] == k))
                    throw ParseError(lineno, "duplicate bracket entry");
            seen.push_back({i, j, k});
            algebra->set_bracket(i, j, k, detail::need_rat(toks[5], lineno));
        } else if (kw == "metric") {
            if (!algebra) throw ParseError(lineno, "metric before algebra header");
            if (toks.size() < 2) throw ParseError(lineno, "metric needs a kind");
            const std::string& kind = toks[1];
            int n = algebra->dim();
            if (kind == "gram") {
                section = Section::gram_rows;
                rows_needed = n;
            } else if (kind == "lower") {
                section = Section::lower_rows;
                rows_needed = n;
            } else if (kind == "diag") {
                if (static_cast<int>(toks.size()) != 2 + n)
                    throw ParseError(lineno, "metric diag needs " + std::to_string(n) + " values");
                Mat<Rat> A(n, n);
                for (int i = 0; i < n; ++i) A(i, i) = detail::need_rat(toks[2 + i], lineno);
                frame = A;
            } else if (kind == "killing") {
                want_killing = true;
            } else if (kind == "rank1") {
                Rank1 r1;
                std::size_t t = 2;
                if (t >= toks.size() || toks[t].rfind("base=", 0) != 0)
                    throw ParseError(lineno, "metric rank1 needs base=<killing|gram>");
                std::string base = toks[t].substr(5);
                if (base == "killing") r1.base_killing = true;
                else if (base == "gram") r1.base_killing = false;
                else throw ParseError(lineno, "rank1 base must be killing or gram");
                ++t;
                if (t >= toks.size() || toks[t].rfind("V=", 0) != 0)
                    throw ParseError(lineno, "metric rank1 needs V=<components>");
                r1.V.push_back(detail::need_rat(toks[t].substr(2), lineno));
                ++t;
                while (t < toks.size() && toks[t].find('=') == std::string::npos)
                    r1.V.push_back(detail::need_rat(toks[t++], lineno));
                if (static_cast<int>(r1.V.size()) != n)
                    throw ParseError(lineno, "rank1 V needs " + std::to_string(n) + " components");
                if (t >= toks.size() || toks[t].rfind("alpha=", 0) != 0)
                    throw ParseError(lineno, "metric rank1 needs alpha=<scalar>");
                r1.alpha = detail::need_rat(toks[t].substr(6), lineno);
                rank1 = std::move(r1);
            } else {
                throw ParseError(lineno, "unknown metric kind '" + kind + "'");
            }
        } else if (kw == "hsubalgebra") {
            if (!algebra) throw ParseError(lineno, "hsubalgebra before algebra header");
            section = Section::h_rows;
            rows_needed = toks.size() > 1 ? std::stoi(toks[1]) : 0;
            if (rows_needed <= 0) throw ParseError(lineno, "hsubalgebra needs a positive row count");
        } else if (kw == "mcomplement") {
            if (!algebra) throw ParseError(lineno, "mcomplement before algebra header");
            section = Section::m_rows;
            rows_needed = toks.size() > 1 ? std::stoi(toks[1]) : 0;
            if (rows_needed <= 0) throw ParseError(lineno, "mcomplement needs a positive row count");
        } else if (kw == "mmetric") {
            if (toks.size() != 2 || toks[1] != "gram")
                throw ParseError(lineno, "expected: mmetric gram");
            if (m_rows.empty()) throw ParseError(lineno, "mmetric after mcomplement, please");
            section = Section::mgram_rows;
            rows_needed = static_cast<int>(m_rows.size());
        } else {
            throw ParseError(lineno, "unknown keyword '" + kw + "'");
        }
    }
    flush_rows();

    if (!algebra) throw ParseError(lineno, "missing algebra header");
    auto jr = algebra->jacobi_check();
    if (!jr.pass) {
        std::ostringstream os;
        os << "structure constants violate the Jacobi identity at (" << jr.i + 1 << "," << jr.j + 1
           << "," << jr.k + 1 << "," << jr.l + 1 << "), residual " << to_string(jr.worst_residual);
        throw ParseError(lineno, os.str());
    }

    ParsedModel out{*algebra, std::nullopt, std::nullopt};
    // assemble the metric
    std::optional<InnerProduct<Rat>> ip;
    try {
        if (frame) ip = from_lower_triangular(*frame);
        else if (gram) ip = InnerProduct<Rat>(*gram);
        else if (want_killing) ip = minus_half_killing(*algebra);
        if (rank1) {
            InnerProduct<Rat> base = rank1->base_killing
                                         ? minus_half_killing(*algebra)
                                         : (ip ? *ip
                                               : throw ParseError(lineno, "rank1 base=gram needs a prior metric"));
            ip = rank_one_perturbation(base, rank1->V, rank1->alpha);
        }
    } catch (const ParseError&) {
        throw;
    } catch (const std::exception& e) {
        throw ParseError(lineno, std::string("metric rejected: ") + e.what());
    }
    out.metric = ip;

    if (!h_rows.empty() || !m_rows.empty()) {
        if (m_rows.empty()) throw ParseError(lineno, "hsubalgebra requires an mcomplement section");
        std::optional<InnerProduct<Rat>> ipm;
        try {
            if (m_gram) {
                ipm = InnerProduct<Rat>(*m_gram);
            } else {
                // restrict the ambient metric (or -1/2 B) to m
                Mat<Rat> G = ip ? ip->gram() : minus_half_killing(*algebra).gram();
                int mk = static_cast<int>(m_rows.size());
                Mat<Rat> R(mk, mk);
                for (int i = 0; i < mk; ++i)
                    for (int j = 0; j < mk; ++j) {
                        Rat s(0);
                        for (int p = 0; p < algebra->dim(); ++p)
                            for (int q = 0; q < algebra->dim(); ++q)
                                s += m_rows[i][p] * G(p, q) * m_rows[j][q];
                        R(i, j) = s;
                    }
                ipm = InnerProduct<Rat>(R);
            }
            out.reductive = ReductiveSpace<Rat>(*algebra, h_rows, m_rows, *ipm);
        } catch (const ParseError&) {
            throw;
        } catch (const std::exception& e) {
            throw ParseError(lineno, std::string("reductive section rejected: ") + e.what());
        }
    }
    return out;
}

inline ParsedModel parse_input_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot open input file '" + path + "'");
    return parse_input(f);
}

}  // namespace geovec
