#pragma once

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include "geovec/expmat.hpp"
#include "geovec/flow.hpp"
#include "geovec/lll.hpp"

namespace geovec {

enum class OrbitKind { fixed_point, line, circle, torus };

inline const char* to_string(OrbitKind k) {
    switch (k) {
        case OrbitKind::fixed_point: return "point";
        case OrbitKind::line: return "line";
        case OrbitKind::circle: return "circle";
        case OrbitKind::torus: return "torus";
    }
    return "?";
}

struct ClosureReport {
    OrbitKind kind = OrbitKind::fixed_point;
    int torus_dim = 0;                         // rank of the frequency set
    Vec<double> frequencies;                   // deduplicated |theta_j|, sorted
    std::vector<std::vector<long>> relations;  // integer relations found
    long coeff_bound = 0;                      // certificate: no relation below this
    double tol = 0;
};

// Frequencies of exp(t rho(X)): imaginary parts of the eigenvalues of rho(X),
// deduplicated up to sign, zeros dropped. Throws on non-skew-hermitian input
// (the unbounded case; classify_closure reports it as a line).
inline Vec<double> frequencies(const MatrixRealization& rho, const Vec<double>& X,
                               double tol = 1e-9) {
    CMat M = rho.map(X);
    if (hermiticity_defect(M) > tol * std::max(1.0, frob_norm(M)))
        throw std::domain_error("realization is not skew-hermitian: unbounded orbit (line case)");
    // H = -i M is hermitian with the theta_j as eigenvalues
    CMat H(M.n);
    for (std::size_t t = 0; t < M.a.size(); ++t) H.a[t] = Cplx(0, -1) * M.a[t];
    auto eig = hermitian_eigen(H);
    Vec<double> thetas;
    for (double v : eig.values) {
        double av = std::fabs(v);
        if (av <= tol) continue;
        bool dup = false;
        for (double t : thetas)
            if (std::fabs(t - av) <= tol) { dup = true; break; }
        if (!dup) thetas.push_back(av);
    }
    std::sort(thetas.begin(), thetas.end());
    return thetas;
}

struct QRank {
    int rank = 0;
    std::vector<std::vector<long>> relations;
};

// Exact variant for rational frequencies: the rank over Q is 1 whenever any
// frequency is nonzero, and the relation lattice comes from gcd arithmetic.
inline QRank q_rank_exact(const std::vector<Rat>& thetas) {
    QRank out;
    std::vector<int> nonzero;
    for (std::size_t i = 0; i < thetas.size(); ++i)
        if (thetas[i] != 0) nonzero.push_back(static_cast<int>(i));
    if (nonzero.empty()) return out;
    out.rank = 1;
    // pairwise relations (q_j p_i) theta_i - (q_i p_j) theta_j = 0, reduced
    for (std::size_t a = 0; a + 1 < nonzero.size(); ++a) {
        int i = nonzero[a], j = nonzero[a + 1];
        mpz_class ci = thetas[j].get_num() * thetas[i].get_den();
        mpz_class cj = thetas[i].get_num() * thetas[j].get_den();
        mpz_class g;
        mpz_gcd(g.get_mpz_t(), ci.get_mpz_t(), cj.get_mpz_t());
        std::vector<long> rel(thetas.size(), 0);
        rel[i] = mpz_class(ci / g).get_si();
        rel[j] = -mpz_class(cj / g).get_si();
        out.relations.push_back(std::move(rel));
    }
    return out;
}

// Q-rank of a float frequency list: searches integer relations with
// |coefficients| <= bound via exact LLL on the embedded lattice. A reported
// rank is a certificate only relative to the bound (carried in the report).
inline QRank q_rank(const Vec<double>& thetas, long bound = 1000000, double tol = 1e-9) {
    QRank out;
    const int n = static_cast<int>(thetas.size());
    if (n == 0) return out;
    double scale = 0;
    for (double t : thetas) scale = std::max(scale, std::fabs(t));
    if (scale <= tol) return out;
    if (n == 1) { out.rank = 1; return out; }

    // lattice rows: [e_i | N * theta_i]; short vectors expose relations
    const double N = 1e12;
    std::vector<std::vector<long>> found;
    std::vector<int> active(n);
    for (int i = 0; i < n; ++i) active[i] = i;

    // iteratively extract relations: reduce, take rows whose embedded
    // combination is small, then repeat on the quotient (here: simply collect
    // all sufficiently short reduced rows; dimensions are tiny)
    std::vector<std::vector<mpz_class>> basis(n, std::vector<mpz_class>(n + 1, 0));
    for (int i = 0; i < n; ++i) {
        basis[i][i] = 1;
        double scaled = thetas[i] / scale * N;
        mpz_class z;
        mpz_set_d(z.get_mpz_t(), std::llround(scaled));
        basis[i][n] = z;
    }
    lll_reduce(basis);
    for (const auto& row : basis) {
        std::vector<long> rel(n);
        long maxc = 0;
        for (int i = 0; i < n; ++i) {
            if (!row[i].fits_slong_p()) { maxc = bound + 1; break; }
            rel[i] = row[i].get_si();
            maxc = std::max(maxc, std::labs(rel[i]));
        }
        if (maxc == 0 || maxc > bound) continue;
        double combo = 0;
        for (int i = 0; i < n; ++i) combo += rel[i] * thetas[i];
        if (std::fabs(combo) >= tol) continue;
        found.push_back(rel);
    }
    // rank of the found relation set (over the rationals, via float rank)
    int relrank = 0;
    if (!found.empty()) {
        Mat<double> R(static_cast<int>(found.size()), n);
        for (std::size_t i = 0; i < found.size(); ++i)
            for (int j = 0; j < n; ++j) R(static_cast<int>(i), j) = static_cast<double>(found[i][j]);
        relrank = rank(R, 1e-9);
    }
    out.rank = n - relrank;
    out.relations = std::move(found);
    return out;
}

// Closure trichotomy of exp(tX): rank 0 -> point, rank 1 -> circle,
// rank >= 2 -> torus of that dimension; non-skew realizations -> line.
inline ClosureReport classify_closure(const MatrixRealization& rho, const Vec<double>& X,
                                      long bound = 1000000, double tol = 1e-9) {
    ClosureReport rep;
    rep.coeff_bound = bound;
    rep.tol = tol;
    Vec<double> thetas;
    try {
        thetas = frequencies(rho, X, tol);
    } catch (const std::domain_error&) {
        rep.kind = OrbitKind::line;
        return rep;
    }
    rep.frequencies = thetas;
    auto qr = q_rank(thetas, bound, tol);
    rep.relations = qr.relations;
    rep.torus_dim = qr.rank;
    if (qr.rank == 0) rep.kind = OrbitKind::fixed_point;
    else if (qr.rank == 1) rep.kind = OrbitKind::circle;
    else rep.kind = OrbitKind::torus;
    return rep;
}

// Exact-rational variant used when the frequencies are known in closed form.
inline ClosureReport classify_closure_exact(const std::vector<Rat>& thetas, long bound = 1000000) {
    ClosureReport rep;
    rep.coeff_bound = bound;
    auto qr = q_rank_exact(thetas);
    rep.torus_dim = qr.rank;
    rep.relations = qr.relations;
    for (const auto& t : thetas)
        if (t != 0) rep.frequencies.push_back(std::fabs(to_double(t)));
    std::sort(rep.frequencies.begin(), rep.frequencies.end());
    if (qr.rank == 0) rep.kind = OrbitKind::fixed_point;
    else if (qr.rank == 1) rep.kind = OrbitKind::circle;
    else rep.kind = OrbitKind::torus;
    return rep;
}

// Covering defect of the orbit sample {exp(tX) : t in [0,T]} on the closure
// torus: angles are read off through the eigenvector frame of rho(X), the
// defect is the largest torus distance from a grid cell center to the sample.
struct DensityReport {
    double covering_defect = 0;  // radians, flat-torus distance
    int grid = 0;
    int dims = 0;
    std::vector<std::pair<double, double>> samples;  // angle pairs (2d case)
};

inline DensityReport density_check(const MatrixRealization& rho, const Vec<double>& X,
                                   const ClosureReport& rep, double T, double h = 0.1,
                                   int grid = 100, bool keep_samples = false) {
    DensityReport out;
    out.grid = grid;
    const auto& th = rep.frequencies;
    int k = std::min<int>(rep.torus_dim, 2);
    if (k == 0 || th.empty()) return out;
    // pick k frequencies: smallest and largest are Q-independent in the rank-2
    // catalog cases; for rank 1 the single frequency suffices
    Vec<double> freq;
    freq.push_back(th.front());
    if (k == 2) freq.push_back(th.back());
    out.dims = k;

    // The group curve is sampled incrementally, g_{s+1} = g_s exp(h X), and
    // the torus angles are read off as arg(u_j^* g u_j) on the eigenvectors
    // u_j of rho(X) whose frequencies were selected above.
    CMat M = rho.map(X);
    CMat H(M.n);
    for (std::size_t t = 0; t < M.a.size(); ++t) H.a[t] = Cplx(0, -1) * M.a[t];
    auto eig = hermitian_eigen(H);
    std::vector<int> pick;
    for (double f : freq) {
        int best = -1;
        double bd = 1e300;
        for (std::size_t i = 0; i < eig.values.size(); ++i) {
            double d = std::fabs(std::fabs(eig.values[i]) - f);
            if (d < bd) { bd = d; best = static_cast<int>(i); }
        }
        pick.push_back(best);
    }
    CMat stepm = expm(Cplx(h, 0) * M);
    // track w_j(t) = g(t) u_j; the phase is arg(u_j^* w_j)
    std::vector<std::vector<Cplx>> w(pick.size());
    for (std::size_t p = 0; p < pick.size(); ++p) w[p] = eig.vectors[pick[p]];
    auto advance = [&](std::vector<Cplx>& v) {
        std::vector<Cplx> nv(v.size(), Cplx(0, 0));
        for (int i = 0; i < stepm.n; ++i)
            for (int j = 0; j < stepm.n; ++j) nv[i] += stepm(i, j) * v[j];
        v = std::move(nv);
    };
    auto phase = [&](std::size_t p) {
        Cplx amp(0, 0);
        const auto& u = eig.vectors[pick[p]];
        for (std::size_t i = 0; i < u.size(); ++i) amp += std::conj(u[i]) * w[p][i];
        double a = std::arg(amp);
        const double two_pi = 6.283185307179586;
        if (a < 0) a += two_pi;
        return a;
    };

    const double two_pi = 6.283185307179586;
    const int steps = static_cast<int>(T / h);
    std::vector<std::vector<char>> occupied;
    if (k == 2) occupied.assign(grid, std::vector<char>(grid, 0));
    std::vector<char> occ1(grid, 0);
    for (int s = 0; s <= steps; ++s) {
        double a0 = phase(0);
        if (k == 1) {
            occ1[static_cast<int>(a0 / two_pi * grid) % grid] = 1;
        } else {
            double a1 = phase(1);
            int i0 = static_cast<int>(a0 / two_pi * grid) % grid;
            int i1 = static_cast<int>(a1 / two_pi * grid) % grid;
            occupied[i0][i1] = 1;
            if (keep_samples && s < 20000) out.samples.emplace_back(a0, a1);
        }
        for (auto& v : w) advance(v);
    }
    double cell = two_pi / grid;
    if (k == 1) {
        // largest run of empty cells
        int run = 0, best = 0;
        for (int i = 0; i < 2 * grid; ++i) {
            if (!occ1[i % grid]) ++run; else run = 0;
            best = std::max(best, std::min(run, grid));
        }
        out.covering_defect = best * cell;
        return out;
    }
    // multi-source BFS distance transform on the torus grid
    std::vector<std::vector<int>> dist(grid, std::vector<int>(grid, -1));
    std::vector<std::pair<int, int>> queue;
    for (int i = 0; i < grid; ++i)
        for (int j = 0; j < grid; ++j)
            if (occupied[i][j]) {
                dist[i][j] = 0;
                queue.emplace_back(i, j);
            }
    if (queue.empty()) {
        out.covering_defect = two_pi;  // nothing sampled
        return out;
    }
    std::size_t head = 0;
    int worst = 0;
    while (head < queue.size()) {
        auto [i, j] = queue[head++];
        const int di[4] = {1, -1, 0, 0}, dj[4] = {0, 0, 1, -1};
        for (int d = 0; d < 4; ++d) {
            int ni = (i + di[d] + grid) % grid, nj = (j + dj[d] + grid) % grid;
            if (dist[ni][nj] < 0) {
                dist[ni][nj] = dist[i][j] + 1;
                worst = std::max(worst, dist[ni][nj]);
                queue.emplace_back(ni, nj);
            }
        }
    }
    out.covering_defect = worst * cell;
    return out;
}

}  // namespace geovec
