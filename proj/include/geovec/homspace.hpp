#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "geovec/catalog.hpp"
#include "geovec/inner_product.hpp"
#include "geovec/lie_algebra.hpp"
#include "geovec/rng.hpp"

namespace geovec {

// Reductive decomposition g = h (+) m with [h, m] <= m and an inner product on
// the m-coordinates. Construction verifies (exactly on the rational backend):
//   - h and m together span g with the right dimensions,
//   - reductivity [h, m] <= m,
//   - infinitesimal invariance: ad(Z)|_m skew w.r.t. ip_m for basis Z of h.
template <typename S>
class ReductiveSpace {
public:
    ReductiveSpace(LieAlgebra<S> g, std::vector<Vec<S>> h_span, std::vector<Vec<S>> m_span,
                   InnerProduct<S> ip_m, double tol = 1e-10)
        : g_(std::move(g)), h_(std::move(h_span)), m_(std::move(m_span)), ipm_(std::move(ip_m)) {
        const int n = g_.dim();
        const int hk = static_cast<int>(h_.size()), mk = static_cast<int>(m_.size());
        if (hk + mk != n) throw std::invalid_argument("h and m must complement to the full algebra");
        if (ipm_.dim() != mk) throw std::invalid_argument("metric dimension must match dim m");
        std::vector<Vec<S>> all = h_;
        all.insert(all.end(), m_.begin(), m_.end());
        if (!linearly_independent(all, tol))
            throw std::invalid_argument("h + m is not a direct sum");
        // basis-change matrix: columns are (h | m), used for projections
        basis_ = Mat<S>(n, n);
        for (int j = 0; j < n; ++j)
            for (int i = 0; i < n; ++i) basis_(i, j) = all[j][i];
        basis_inv_ = inverse(basis_, tol);
        // reductivity: [h, m] has no h-component
        for (const auto& Z : h_)
            for (const auto& Y : m_) {
                auto coords = mat_vec(basis_inv_, g_.bracket(Z, Y));
                for (int i = 0; i < hk; ++i)
                    if (!scalar_traits<S>::is_zero(coords[i], tol))
                        throw std::invalid_argument("decomposition is not reductive: [h,m] leaves m");
            }
        // infinitesimal Ad(H)-invariance of the metric on m
        for (const auto& Z : h_) {
            Mat<S> ad_m(mk, mk);
            for (int j = 0; j < mk; ++j) {
                auto coords = mat_vec(basis_inv_, g_.bracket(Z, m_[j]));
                for (int i = 0; i < mk; ++i) ad_m(i, j) = coords[hk + i];
            }
            Mat<S> skew = transpose(ad_m) * ipm_.gram() + ipm_.gram() * ad_m;
            for (const auto& v : skew.a)
                if (!scalar_traits<S>::is_zero(v, tol))
                    throw std::invalid_argument("metric on m is not ad(h)-invariant");
        }
    }

    const LieAlgebra<S>& algebra() const { return g_; }
    const std::vector<Vec<S>>& h_basis() const { return h_; }
    const std::vector<Vec<S>>& m_basis() const { return m_; }
    const InnerProduct<S>& metric_m() const { return ipm_; }
    int dim_h() const { return static_cast<int>(h_.size()); }
    int dim_m() const { return static_cast<int>(m_.size()); }

    // m-component of x along h, in ambient coordinates.
    Vec<S> m_projection(const Vec<S>& x) const {
        auto coords = mat_vec(basis_inv_, x);
        Vec<S> out = zero_vec<S>(g_.dim());
        for (int i = 0; i < dim_m(); ++i)
            out = vec_add(out, vec_scale(coords[dim_h() + i], m_[i]));
        return out;
    }

    // m-coordinates of (the m-component of) an ambient vector.
    Vec<S> m_coordinates(const Vec<S>& x) const {
        auto coords = mat_vec(basis_inv_, x);
        Vec<S> out(dim_m());
        for (int i = 0; i < dim_m(); ++i) out[i] = coords[dim_h() + i];
        return out;
    }

private:
    LieAlgebra<S> g_;
    std::vector<Vec<S>> h_;
    std::vector<Vec<S>> m_;
    InnerProduct<S> ipm_;
    Mat<S> basis_, basis_inv_;
};

template <typename S>
struct GoSolution {
    Vec<S> Z;           // in ambient coordinates, lies in span(h)
    S residual;         // max_j |([X+Z, Y_j]_m, X)| over the m-basis
};

// Homogeneous-geodesic test for a direction X in m: solve the linear system
//   ([Z, Y_j]_m, X)_m = -([X, Y_j]_m, X)_m   over a basis {Y_j} of m
// for Z in h (minimum-norm least squares); a residual at zero certifies that
// exp(t(X+Z)) projects to a geodesic through the base point.
template <typename S>
GoSolution<S> go_solve(const ReductiveSpace<S>& rs, const Vec<S>& X_m) {
    const int hk = rs.dim_h(), mk = rs.dim_m();
    if (static_cast<int>(X_m.size()) != static_cast<int>(rs.algebra().dim()))
        throw std::invalid_argument("X must be given in ambient coordinates");
    Vec<S> Xc = rs.m_coordinates(X_m);
    Mat<S> A(mk, hk);
    Vec<S> b(mk, scalar_traits<S>::zero());
    for (int j = 0; j < mk; ++j) {
        const Vec<S>& Yj = rs.m_basis()[j];
        for (int a = 0; a < hk; ++a) {
            auto br = rs.m_coordinates(rs.algebra().bracket(rs.h_basis()[a], Yj));
            A(j, a) = rs.metric_m().ip(br, Xc);
        }
        auto brx = rs.m_coordinates(rs.algebra().bracket(X_m, Yj));
        b[j] = -rs.metric_m().ip(brx, Xc);
    }
    GoSolution<S> sol{zero_vec<S>(rs.algebra().dim()), scalar_traits<S>::zero()};
    Vec<S> z(hk, scalar_traits<S>::zero());
    if (hk > 0) z = least_squares_min_norm(A, b);
    for (int a = 0; a < hk; ++a) sol.Z = vec_add(sol.Z, vec_scale(z[a], rs.h_basis()[a]));
    // residual: max violation of the geodesic condition for X + Z
    Vec<S> XZ = vec_add(X_m, sol.Z);
    S worst = scalar_traits<S>::zero();
    for (int j = 0; j < mk; ++j) {
        auto br = rs.m_coordinates(rs.algebra().bracket(XZ, rs.m_basis()[j]));
        S v = scalar_traits<S>::abs(rs.metric_m().ip(br, Xc));
        if (v > worst) worst = v;
    }
    sol.residual = worst;
    return sol;
}

template <typename S>
struct GoCheckReport {
    bool all_pass = true;
    double max_residual = 0;
    Vec<S> worst_X;
    int samples = 0;
};

// Samples random unit directions in m and reports the worst residual; a
// failing direction is a counterexample, success is only "no counterexample
// among N samples".
template <typename S>
GoCheckReport<S> go_sample_check(const ReductiveSpace<S>& rs, int samples, std::uint64_t seed,
                                 double tol = 1e-10) {
    SeededRng rng(seed);
    GoCheckReport<S> rep;
    rep.samples = samples;
    const int n = rs.algebra().dim();
    for (int s = 0; s < samples; ++s) {
        Vec<S> coords(rs.dim_m());
        for (auto& c : coords) c = random_scalar<S>(rng);
        Vec<S> X = zero_vec<S>(n);
        for (int i = 0; i < rs.dim_m(); ++i)
            X = vec_add(X, vec_scale(coords[i], rs.m_basis()[i]));
        if (is_zero_vec(X, 1e-12)) continue;
        auto sol = go_solve(rs, X);
        double r = std::fabs(to_double(sol.residual));
        if (r > rep.max_residual) {
            rep.max_residual = r;
            rep.worst_X = X;
        }
        if (r > tol) rep.all_pass = false;
    }
    return rep;
}

// The Lie-group case as a trivial reductive space: h = {0}, m = g.
template <typename S>
ReductiveSpace<S> lie_group_as_reductive(const MetricLieAlgebra<S>& m) {
    std::vector<Vec<S>> h;  // empty
    std::vector<Vec<S>> mb;
    for (int i = 0; i < m.dim(); ++i) mb.push_back(basis_vec<S>(m.dim(), i));
    return ReductiveSpace<S>(m.algebra, h, mb, m.metric);
}

namespace catalog_spaces {

// Symmetric pair: g = su2+su2, h = diagonal, m = antidiagonal, metric from
// the bi-invariant form restricted to m (gram 2 I in the m-basis).
inline ReductiveSpace<Rat> symmetric_pair_su2su2() {
    auto g = catalog::su2su2();
    std::vector<Vec<Rat>> h, m;
    for (int i = 0; i < 3; ++i) {
        Vec<Rat> d = zero_vec<Rat>(6), a = zero_vec<Rat>(6);
        d[i] = 1; d[i + 3] = 1;
        a[i] = 1; a[i + 3] = -1;
        h.push_back(d);
        m.push_back(a);
    }
    Mat<Rat> G = Mat<Rat>::identity(3);
    for (auto& v : G.a) v *= Rat(2);
    return ReductiveSpace<Rat>(std::move(g), std::move(h), std::move(m), InnerProduct<Rat>(G));
}

// Berger-sphere construction: g = su(2) + R acting on S^3, h spanned by the
// mixed vector E3 + E4, m = {E1, E2, E3 - E4} with metric diag(s, s, t).
inline ReductiveSpace<Rat> berger_sphere(const Rat& s, const Rat& t) {
    auto g = direct_sum(catalog::su2(), catalog::abelian(1));
    std::vector<Vec<Rat>> h{Vec<Rat>{Rat(0), Rat(0), Rat(1), Rat(1)}};
    std::vector<Vec<Rat>> m{Vec<Rat>{Rat(1), Rat(0), Rat(0), Rat(0)},
                            Vec<Rat>{Rat(0), Rat(1), Rat(0), Rat(0)},
                            Vec<Rat>{Rat(0), Rat(0), Rat(1), Rat(-1)}};
    Mat<Rat> G(3, 3);
    G(0, 0) = s; G(1, 1) = s; G(2, 2) = t;
    return ReductiveSpace<Rat>(std::move(g), std::move(h), std::move(m), InnerProduct<Rat>(G));
}

}  // namespace catalog_spaces

}  // namespace geovec
