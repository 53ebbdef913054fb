#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "geovec/inner_product.hpp"
#include "geovec/rng.hpp"

namespace geovec {

// The quadratic map: xi(X) is the unique vector with (xi(X), Y) = ([X,Y], X)
// for all Y. Its zeros are exactly the geodesic vectors.
template <typename S>
Vec<S> xi(const MetricLieAlgebra<S>& m, const Vec<S>& X) {
    const int n = m.dim();
    Vec<S> w(n, scalar_traits<S>::zero());
    for (int j = 0; j < n; ++j)
        w[j] = m.metric.ip(m.algebra.bracket(X, basis_vec<S>(n, j)), X);
    return m.metric.raise(w);
}

// Polarization of xi: the symmetric bilinear map with B(X,X) = xi(X).
template <typename S>
Vec<S> xi_polarized(const MetricLieAlgebra<S>& m, const Vec<S>& X, const Vec<S>& Y) {
    S half = scalar_traits<S>::from_ratio(1, 2);
    Vec<S> s = xi(m, vec_add(X, Y));
    s = vec_sub(s, xi(m, X));
    s = vec_sub(s, xi(m, Y));
    return vec_scale(half, s);
}

template <typename S>
bool is_geodesic_vector(const MetricLieAlgebra<S>& m, const Vec<S>& X,
                        const S& tol = scalar_traits<S>::zero()) {
    Vec<S> v = xi(m, X);
    if constexpr (scalar_traits<S>::is_exact) {
        (void)tol;
        return is_zero_vec(v);
    } else {
        return norm2(v) <= tol;
    }
}

// Delta vector: the metric dual of Y -> trace ad(Y); zero iff unimodular.
template <typename S>
Vec<S> delta(const MetricLieAlgebra<S>& m) {
    const int n = m.dim();
    Vec<S> w(n, scalar_traits<S>::zero());
    for (int j = 0; j < n; ++j) w[j] = m.algebra.trace_ad(basis_vec<S>(n, j));
    return m.metric.raise(w);
}

// Delta recomputed as -sum_i xi(F_i) over an orthonormal frame. Any frame
// works; when none is supplied the frame-free metric trace of the polarized
// form is used (equal to the frame sum for every orthonormal frame).
template <typename S>
Vec<S> delta_from_xi(const MetricLieAlgebra<S>& m) {
    const int n = m.dim();
    const Mat<S>& Ginv = m.metric.gram_inv();
    Vec<S> acc = zero_vec<S>(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const S& gij = Ginv(i, j);
            if (scalar_traits<S>::is_exact && gij == scalar_traits<S>::zero()) continue;
            Vec<S> bij = xi_polarized(m, basis_vec<S>(n, i), basis_vec<S>(n, j));
            acc = vec_add(acc, vec_scale(gij, bij));
        }
    return vec_scale(S(-scalar_traits<S>::one()), acc);
}

template <typename S>
Vec<S> delta_from_xi_frame(const MetricLieAlgebra<S>& m, const std::vector<Vec<S>>& frame,
                           double tol = 1e-9) {
    if (static_cast<int>(frame.size()) != m.dim())
        throw std::invalid_argument("frame size must equal the dimension");
    for (std::size_t i = 0; i < frame.size(); ++i)
        for (std::size_t j = i; j < frame.size(); ++j) {
            S v = m.metric.ip(frame[i], frame[j]);
            S want = (i == j) ? scalar_traits<S>::one() : scalar_traits<S>::zero();
            if constexpr (scalar_traits<S>::is_exact) {
                if (v != want) throw std::invalid_argument("frame is not orthonormal");
            } else {
                if (std::fabs(to_double(v) - to_double(want)) > tol)
                    throw std::invalid_argument("frame is not orthonormal");
            }
        }
    Vec<S> acc = zero_vec<S>(m.dim());
    for (const auto& f : frame) acc = vec_add(acc, xi(m, f));
    return vec_scale(S(-scalar_traits<S>::one()), acc);
}

// Linear/affine family of vectors: base + span(directions).
template <typename S>
struct AffineFamily {
    std::string name;
    Vec<S> base;
    std::vector<Vec<S>> directions;

    Vec<S> point(const Vec<S>& params) const {
        Vec<S> p = base;
        for (std::size_t i = 0; i < directions.size(); ++i)
            p = vec_add(p, vec_scale(params[i], directions[i]));
        return p;
    }
};

// True iff xi vanishes exactly at `samples` seeded random rational points.
template <typename S>
bool verify_family(const MetricLieAlgebra<S>& m, const AffineFamily<S>& fam, int samples,
                   std::uint64_t seed, const S& tol = scalar_traits<S>::zero()) {
    SeededRng rng(seed);
    for (int s = 0; s < samples; ++s) {
        Vec<S> params(fam.directions.size());
        for (auto& p : params) p = random_scalar<S>(rng);
        if (!is_geodesic_vector(m, fam.point(params), tol)) return false;
    }
    return true;
}

// Euclidean distance from x to the affine family (float computation).
inline double family_distance(const AffineFamily<double>& fam, const Vec<double>& x) {
    // distance to base + span: project x - base onto span via normal equations
    Vec<double> r = vec_sub(x, fam.base);
    const int k = static_cast<int>(fam.directions.size());
    if (k == 0) return norm2(r);
    Mat<double> D(static_cast<int>(r.size()), k);
    for (int j = 0; j < k; ++j)
        for (std::size_t i = 0; i < r.size(); ++i) D(static_cast<int>(i), j) = fam.directions[j][i];
    auto coef = least_squares_min_norm(D, r);
    Vec<double> proj = mat_vec(D, coef);
    return norm2(vec_sub(r, proj));
}

struct ZeroSetReport {
    struct Zero {
        Vec<double> x;          // unit norm, sign-normalized
        double residual = 0;    // ||xi(x)||
        int family = -1;        // index of the matched family, -1 if none
        double family_dist = 0;
    };
    std::vector<Zero> zeros;
    int restarts = 0;
    int converged = 0;
};

namespace detail {

// Quadratic-form matrices S_j with w_j(X) = X^T S_j X; gradient is (S+S^T)X.
inline std::vector<Mat<double>> xi_form_matrices(const MetricLieAlgebra<double>& m) {
    const int n = m.dim();
    std::vector<Mat<double>> forms;
    forms.reserve(n);
    for (int j = 0; j < n; ++j) {
        Mat<double> Sj(n, n);
        for (int p = 0; p < n; ++p) {
            auto bpj = m.algebra.bracket(basis_vec<double>(n, p), basis_vec<double>(n, j));
            for (int q = 0; q < n; ++q)
                Sj(p, q) = m.metric.ip(bpj, basis_vec<double>(n, q));
        }
        forms.push_back(std::move(Sj));
    }
    return forms;
}

}  // namespace detail

// Newton iteration on the unit sphere for zeros of xi, from seeded random
// starts. Converged points are normalized (zeros are scale-invariant rays)
// and deduplicated; each is assigned to the nearest family within 1e-6.
inline ZeroSetReport zero_set_solve(const MetricLieAlgebra<double>& m, int restarts,
                                    std::uint64_t seed, double tol = 1e-12,
                                    const std::vector<AffineFamily<double>>& families = {},
                                    int max_iter = 100) {
    const int n = m.dim();
    SeededRng rng(seed);
    auto forms = detail::xi_form_matrices(m);
    const Mat<double>& Ginv = m.metric.gram_inv();
    ZeroSetReport rep;
    rep.restarts = restarts;

    auto eval_xi = [&](const Vec<double>& x) {
        Vec<double> w(n);
        for (int j = 0; j < n; ++j) {
            double s = 0;
            for (int p = 0; p < n; ++p)
                for (int q = 0; q < n; ++q) s += x[p] * forms[j](p, q) * x[q];
            w[j] = s;
        }
        return mat_vec(Ginv, w);
    };
    auto eval_jac = [&](const Vec<double>& x) {
        Mat<double> Jw(n, n);
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                double s = 0;
                for (int p = 0; p < n; ++p) s += (forms[j](k, p) + forms[j](p, k)) * x[p];
                Jw(j, k) = s;
            }
        return Ginv * Jw;
    };

    // Orthonormal basis of the tangent space x^perp via a Householder
    // reflector; the radial direction must be excluded because 2-homogeneity
    // makes x/2 an exact Newton step (the iteration would stall on the sphere).
    auto tangent_basis = [&](const Vec<double>& x) {
        Vec<double> v = x;
        v[0] += (x[0] >= 0 ? 1.0 : -1.0);
        double vv = dot(v, v);
        Mat<double> T(n, n - 1);
        for (int col = 1; col < n; ++col)
            for (int i = 0; i < n; ++i)
                T(i, col - 1) = (i == col ? 1.0 : 0.0) - 2.0 * v[i] * v[col] / vv;
        return T;
    };

    for (int r = 0; r < restarts; ++r) {
        Vec<double> x = random_unit_vec(rng, n);
        bool ok = false;
        for (int it = 0; it < max_iter; ++it) {
            Vec<double> f = eval_xi(x);
            double rf = norm2(f);
            if (rf < tol) { ok = true; break; }
            Mat<double> T = tangent_basis(x);
            Mat<double> JT = eval_jac(x) * T;
            Vec<double> u;
            try {
                u = least_squares_min_norm(JT, f, 1e-10);
            } catch (const std::runtime_error&) {
                break;
            }
            Vec<double> step = mat_vec(T, u);
            // backtracking keeps the residual monotone near the quadric sheets
            double lambda = 1.0;
            Vec<double> cand = x;
            for (int bt = 0; bt < 30; ++bt) {
                for (int i = 0; i < n; ++i) cand[i] = x[i] - lambda * step[i];
                double nc = norm2(cand);
                if (nc > 1e-8) {
                    for (auto& v : cand) v /= nc;
                    if (norm2(eval_xi(cand)) < rf) break;
                }
                lambda *= 0.5;
            }
            if (norm2(vec_sub(cand, x)) < 1e-17) break;  // no progress
            x = cand;
        }
        if (!ok) continue;
        ++rep.converged;
        // sign normalization: first coordinate of largest magnitude positive
        int lead = 0;
        for (int i = 1; i < n; ++i)
            if (std::fabs(x[i]) > std::fabs(x[lead])) lead = i;
        if (x[lead] < 0)
            for (auto& v : x) v = -v;
        bool dup = false;
        for (const auto& z : rep.zeros)
            if (norm2(vec_sub(z.x, x)) < 1e-6) { dup = true; break; }
        if (dup) continue;
        ZeroSetReport::Zero z;
        z.x = x;
        z.residual = norm2(eval_xi(x));
        for (std::size_t fi = 0; fi < families.size(); ++fi) {
            double dist = family_distance(families[fi], x);
            if (z.family < 0 || dist < z.family_dist) {
                z.family_dist = dist;
                z.family = static_cast<int>(fi);
            }
        }
        if (z.family >= 0 && z.family_dist >= 1e-6) z.family = -1;
        rep.zeros.push_back(std::move(z));
    }
    std::sort(rep.zeros.begin(), rep.zeros.end(),
              [](const auto& a, const auto& b) { return a.x < b.x; });
    return rep;
}

// Searches for a basis of geodesic vectors. Compact semisimple algebras get
// the guaranteed simultaneous-basis route; otherwise coordinate axes and
// Newton zeros are collected until n independent vectors are found.
inline std::optional<std::vector<Vec<double>>> geodesic_basis_search(
    const MetricLieAlgebra<double>& m, int restarts, std::uint64_t seed, double tol = 1e-9) {
    const int n = m.dim();
    std::vector<Vec<double>> found;
    auto try_add = [&](const Vec<double>& v) {
        if (!is_geodesic_vector(m, v, tol)) return false;
        auto ext = found;
        ext.push_back(v);
        if (!linearly_independent(ext, 1e-8)) return false;
        found = std::move(ext);
        return true;
    };
    // coordinate axes first (abelian and diagonal cases resolve immediately)
    for (int i = 0; i < n && static_cast<int>(found.size()) < n; ++i)
        try_add(basis_vec<double>(n, i));
    if (static_cast<int>(found.size()) == n) return found;
    // compact semisimple: simultaneous basis is geodesic by construction
    bool compact_ss = true;
    try {
        auto sim = simultaneous_basis(m);
        for (const auto& v : sim.basis) try_add(v);
    } catch (const std::exception&) {
        compact_ss = false;
    }
    (void)compact_ss;
    if (static_cast<int>(found.size()) == n) return found;
    auto rep = zero_set_solve(m, restarts, seed, 1e-12);
    for (const auto& z : rep.zeros) {
        if (static_cast<int>(found.size()) == n) break;
        try_add(z.x);
    }
    if (static_cast<int>(found.size()) == n) return found;
    return std::nullopt;
}

}  // namespace geovec
