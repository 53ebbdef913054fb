#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "geovec/linalg.hpp"

namespace geovec {

// Finite-dimensional Lie algebra as a dense structure-constant tensor:
// [E_i, E_j] = sum_k c[i][j][k] E_k. Values are immutable after construction.
template <typename S>
class LieAlgebra {
public:
    LieAlgebra(int dim, std::string name = {})
        : dim_(dim), name_(std::move(name)),
          c_(static_cast<std::size_t>(dim) * dim * dim, scalar_traits<S>::zero()) {
        if (dim < 0) throw std::invalid_argument("algebra dimension must be nonnegative");
    }

    int dim() const { return dim_; }
    const std::string& name() const { return name_; }

    const S& c(int i, int j, int k) const { return c_[idx(i, j, k)]; }

    // Sets c_{ij}^k and the antisymmetric counterpart.
    void set_bracket(int i, int j, int k, const S& v) {
        if (i == j && !scalar_traits<S>::is_zero(v)) throw std::invalid_argument("[E_i,E_i] must vanish");
        c_[idx(i, j, k)] = v;
        c_[idx(j, i, k)] = -v;
    }

    Vec<S> bracket(const Vec<S>& x, const Vec<S>& y) const {
        check_dim(x);
        check_dim(y);
        Vec<S> out = zero_vec<S>(dim_);
        for (int i = 0; i < dim_; ++i) {
            if (scalar_traits<S>::is_exact && x[i] == scalar_traits<S>::zero()) continue;
            for (int j = 0; j < dim_; ++j) {
                if (scalar_traits<S>::is_exact && y[j] == scalar_traits<S>::zero()) continue;
                S f = x[i] * y[j];
                for (int k = 0; k < dim_; ++k) {
                    const S& ck = c(i, j, k);
                    if (scalar_traits<S>::is_exact && ck == scalar_traits<S>::zero()) continue;
                    out[k] += f * ck;
                }
            }
        }
        return out;
    }

    // Matrix of ad(x): z -> [x, z], columns indexed by the basis.
    Mat<S> ad_matrix(const Vec<S>& x) const {
        check_dim(x);
        Mat<S> m(dim_, dim_);
        for (int j = 0; j < dim_; ++j) {
            auto col = bracket(x, basis_vec<S>(dim_, j));
            for (int k = 0; k < dim_; ++k) m(k, j) = col[k];
        }
        return m;
    }

    S killing_form(const Vec<S>& x, const Vec<S>& y) const {
        Mat<S> ax = ad_matrix(x), ay = ad_matrix(y);
        S tr = scalar_traits<S>::zero();
        for (int i = 0; i < dim_; ++i)
            for (int k = 0; k < dim_; ++k) tr += ax(i, k) * ay(k, i);
        return tr;
    }

    Mat<S> killing_gram() const {
        Mat<S> g(dim_, dim_);
        for (int i = 0; i < dim_; ++i)
            for (int j = i; j < dim_; ++j) {
                g(i, j) = killing_form(basis_vec<S>(dim_, i), basis_vec<S>(dim_, j));
                g(j, i) = g(i, j);
            }
        return g;
    }

    S trace_ad(const Vec<S>& x) const {
        check_dim(x);
        S tr = scalar_traits<S>::zero();
        for (int i = 0; i < dim_; ++i)
            for (int k = 0; k < dim_; ++k) tr += x[i] * c(i, k, k);
        return tr;
    }

    bool is_antisymmetric() const {
        for (int i = 0; i < dim_; ++i)
            for (int j = 0; j < dim_; ++j)
                for (int k = 0; k < dim_; ++k)
                    if (c(i, j, k) != -c(j, i, k)) return false;
        return true;
    }

    struct JacobiReport {
        bool pass = true;
        S worst_residual = scalar_traits<S>::zero();
        int i = -1, j = -1, k = -1, l = -1;
    };

    // Checks sum_m (c_ij^m c_mk^l + c_jk^m c_mi^l + c_ki^m c_mj^l) = 0.
    JacobiReport jacobi_check(const S& tol = scalar_traits<S>::zero()) const {
        JacobiReport rep;
        for (int i = 0; i < dim_; ++i)
            for (int j = i + 1; j < dim_; ++j)
                for (int k = j + 1; k < dim_; ++k)
                    for (int l = 0; l < dim_; ++l) {
                        S s = scalar_traits<S>::zero();
                        for (int m = 0; m < dim_; ++m)
                            s += c(i, j, m) * c(m, k, l) + c(j, k, m) * c(m, i, l) +
                                 c(k, i, m) * c(m, j, l);
                        S r = scalar_traits<S>::abs(s);
                        if (r > rep.worst_residual) {
                            rep.worst_residual = r;
                            rep.i = i; rep.j = j; rep.k = k; rep.l = l;
                        }
                    }
        rep.pass = !(rep.worst_residual > tol);
        return rep;
    }

    LieAlgebra<double> to_float() const {
        LieAlgebra<double> g(dim_, name_);
        for (int i = 0; i < dim_; ++i)
            for (int j = 0; j < dim_; ++j)
                for (int k = 0; k < dim_; ++k) g.raw_set(i, j, k, to_double(c(i, j, k)));
        return g;
    }

    // Unchecked single-entry write, for converters and parsers.
    void raw_set(int i, int j, int k, const S& v) { c_[idx(i, j, k)] = v; }

private:
    std::size_t idx(int i, int j, int k) const {
        return (static_cast<std::size_t>(i) * dim_ + j) * dim_ + k;
    }
    void check_dim(const Vec<S>& v) const {
        if (static_cast<int>(v.size()) != dim_) throw std::invalid_argument("vector/algebra dimension mismatch");
    }

    int dim_;
    std::string name_;
    std::vector<S> c_;
};

// Span of linearly independent vectors closed under the parent bracket.
template <typename S>
struct Subalgebra {
    std::vector<Vec<S>> span;

    int dim() const { return static_cast<int>(span.size()); }

    bool closed_under_bracket(const LieAlgebra<S>& g, double tol = 1e-10) const {
        if (span.empty()) return true;
        auto m = rows_to_mat(span);
        int base_rank = rank(m, tol);
        for (std::size_t i = 0; i < span.size(); ++i)
            for (std::size_t j = i + 1; j < span.size(); ++j) {
                auto rows = span;
                rows.push_back(g.bracket(span[i], span[j]));
                if (rank(rows_to_mat(rows), tol) != base_rank) return false;
            }
        return true;
    }
};

// {Y : trace ad(Y) = 0}; the whole algebra iff g is unimodular.
template <typename S>
Subalgebra<S> unimodular_kernel(const LieAlgebra<S>& g, double tol = 1e-10) {
    const int n = g.dim();
    Mat<S> row(1, n);
    for (int j = 0; j < n; ++j) row(0, j) = g.trace_ad(basis_vec<S>(n, j));
    Subalgebra<S> sub;
    sub.span = kernel_basis(row, tol);
    return sub;
}

template <typename S>
bool is_unimodular(const LieAlgebra<S>& g, double tol = 1e-10) {
    return unimodular_kernel(g, tol).dim() == g.dim();
}

template <typename S>
LieAlgebra<S> direct_sum(const LieAlgebra<S>& g1, const LieAlgebra<S>& g2) {
    const int n1 = g1.dim(), n2 = g2.dim();
    LieAlgebra<S> g(n1 + n2, g1.name() + "+" + g2.name());
    for (int i = 0; i < n1; ++i)
        for (int j = 0; j < n1; ++j)
            for (int k = 0; k < n1; ++k) g.raw_set(i, j, k, g1.c(i, j, k));
    for (int i = 0; i < n2; ++i)
        for (int j = 0; j < n2; ++j)
            for (int k = 0; k < n2; ++k) g.raw_set(n1 + i, n1 + j, n1 + k, g2.c(i, j, k));
    return g;
}

}  // namespace geovec
