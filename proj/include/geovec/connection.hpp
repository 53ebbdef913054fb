#pragma once

#include <stdexcept>
#include <vector>

#include "geovec/geodesy.hpp"
#include "geovec/inner_product.hpp"

namespace geovec {

// Levi-Civita connection table for left-invariant fields, assembled once per
// metric via the Koszul formula
//   2 (nabla_X Y, Z) = ([X,Y],Z) - ([Y,Z],X) + ([Z,X],Y)
// and reused for all curvature queries.
template <typename S>
class ConnectionTable {
public:
    // keeps a reference to the metric algebra; temporaries are rejected
    explicit ConnectionTable(const MetricLieAlgebra<S>&&) = delete;
    explicit ConnectionTable(const MetricLieAlgebra<S>& m) : m_(&m), n_(m.dim()) {
        gamma_.resize(static_cast<std::size_t>(n_) * n_);
        S half = scalar_traits<S>::from_ratio(1, 2);
        for (int i = 0; i < n_; ++i) {
            auto Ei = basis_vec<S>(n_, i);
            for (int j = 0; j < n_; ++j) {
                auto Ej = basis_vec<S>(n_, j);
                Vec<S> w(n_, scalar_traits<S>::zero());
                auto bij = m.algebra.bracket(Ei, Ej);
                for (int k = 0; k < n_; ++k) {
                    auto Ek = basis_vec<S>(n_, k);
                    w[k] = half * (m.metric.ip(bij, Ek) - m.metric.ip(m.algebra.bracket(Ej, Ek), Ei) +
                                   m.metric.ip(m.algebra.bracket(Ek, Ei), Ej));
                }
                gamma_[static_cast<std::size_t>(i) * n_ + j] = m.metric.raise(w);
            }
        }
    }

    const MetricLieAlgebra<S>& metric_algebra() const { return *m_; }
    int dim() const { return n_; }

    const Vec<S>& gamma(int i, int j) const { return gamma_[static_cast<std::size_t>(i) * n_ + j]; }

    // nabla_X Y extended bilinearly (left-invariant fields are constant).
    Vec<S> nabla(const Vec<S>& X, const Vec<S>& Y) const {
        Vec<S> out = zero_vec<S>(n_);
        for (int i = 0; i < n_; ++i) {
            if (scalar_traits<S>::is_exact && X[i] == scalar_traits<S>::zero()) continue;
            for (int j = 0; j < n_; ++j) {
                if (scalar_traits<S>::is_exact && Y[j] == scalar_traits<S>::zero()) continue;
                S f = X[i] * Y[j];
                const Vec<S>& g = gamma(i, j);
                for (int k = 0; k < n_; ++k) out[k] += f * g[k];
            }
        }
        return out;
    }

    // R(X,Y)Z = nabla_X nabla_Y Z - nabla_Y nabla_X Z - nabla_[X,Y] Z.
    Vec<S> riemann(const Vec<S>& X, const Vec<S>& Y, const Vec<S>& Z) const {
        auto a = nabla(X, nabla(Y, Z));
        auto b = nabla(Y, nabla(X, Z));
        auto c = nabla(m_->algebra.bracket(X, Y), Z);
        return vec_sub(vec_sub(a, b), c);
    }

    // Sectional curvature of span{X,Y}: (R(X,Y)Y,X) / ((X,X)(Y,Y) - (X,Y)^2).
    S sectional(const Vec<S>& X, const Vec<S>& Y) const {
        S num = m_->metric.ip(riemann(X, Y, Y), X);
        S den = m_->metric.ip(X, X) * m_->metric.ip(Y, Y) - m_->metric.ip(X, Y) * m_->metric.ip(X, Y);
        if (scalar_traits<S>::is_zero(den, 1e-14))
            throw std::invalid_argument("sectional curvature needs linearly independent vectors");
        return num / den;
    }

    // Ricci tensor Ric(X,Y) = sum_{i,j} G^{ij} (R(E_i,X)Y, E_j) (frame-free
    // contraction; equals the orthonormal-frame sum).
    Mat<S> ricci_tensor() const {
        const Mat<S>& Ginv = m_->metric.gram_inv();
        Mat<S> ric(n_, n_);
        for (int x = 0; x < n_; ++x) {
            auto Ex = basis_vec<S>(n_, x);
            for (int y = x; y < n_; ++y) {
                auto Ey = basis_vec<S>(n_, y);
                S s = scalar_traits<S>::zero();
                for (int i = 0; i < n_; ++i) {
                    auto r = riemann(basis_vec<S>(n_, i), Ex, Ey);
                    for (int j = 0; j < n_; ++j) {
                        if (scalar_traits<S>::is_exact && Ginv(i, j) == scalar_traits<S>::zero()) continue;
                        s += Ginv(i, j) * m_->metric.ip(r, basis_vec<S>(n_, j));
                    }
                }
                ric(x, y) = s;
                ric(y, x) = s;
            }
        }
        return ric;
    }

    // Ricci operator: G^-1 Ric, self-adjoint w.r.t. the metric.
    Mat<S> ricci_operator() const { return m_->metric.gram_inv() * ricci_tensor(); }

private:
    const MetricLieAlgebra<S>* m_;
    int n_;
    std::vector<Vec<S>> gamma_;
};

// Coordinates of x in the subalgebra span, or nullopt if x lies outside.
template <typename S>
std::optional<Vec<S>> coordinates_in_span(const std::vector<Vec<S>>& span, const Vec<S>& x,
                                          double tol = 1e-10) {
    if (span.empty()) return is_zero_vec(x) ? std::optional<Vec<S>>(Vec<S>{}) : std::nullopt;
    const int n = static_cast<int>(span[0].size());
    Mat<S> A(n, static_cast<int>(span.size()));
    for (std::size_t j = 0; j < span.size(); ++j)
        for (int i = 0; i < n; ++i) A(i, static_cast<int>(j)) = span[j][i];
    return solve_any(A, x, tol);
}

// Second fundamental form of the subgroup orbit through the identity:
// the metric-orthogonal projection of nabla_X Y onto the complement of sub.
template <typename S>
Vec<S> second_fundamental_form(const ConnectionTable<S>& conn, const Subalgebra<S>& sub,
                               const Vec<S>& X, const Vec<S>& Y) {
    const auto& m = conn.metric_algebra();
    if (!coordinates_in_span(sub.span, X) || !coordinates_in_span(sub.span, Y))
        throw std::invalid_argument("second fundamental form needs arguments inside the subalgebra");
    Vec<S> nab = conn.nabla(X, Y);
    // tangential part: solve the gram system on the subspace
    const int k = sub.dim();
    if (k == 0) return nab;
    Mat<S> Gs(k, k);
    Vec<S> rhs(k, scalar_traits<S>::zero());
    for (int i = 0; i < k; ++i) {
        for (int j = 0; j < k; ++j) Gs(i, j) = m.metric.ip(sub.span[i], sub.span[j]);
        rhs[i] = m.metric.ip(sub.span[i], nab);
    }
    auto coef = solve(Gs, rhs);
    Vec<S> tang = zero_vec<S>(m.dim());
    for (int i = 0; i < k; ++i) tang = vec_add(tang, vec_scale(coef[i], sub.span[i]));
    return vec_sub(nab, tang);
}

template <typename S>
bool is_totally_geodesic(const ConnectionTable<S>& conn, const Subalgebra<S>& sub,
                         double tol = 1e-10) {
    for (int i = 0; i < sub.dim(); ++i)
        for (int j = i; j < sub.dim(); ++j) {
            auto a = second_fundamental_form(conn, sub, sub.span[i], sub.span[j]);
            if constexpr (scalar_traits<S>::is_exact) {
                if (!is_zero_vec(a)) return false;
            } else {
                if (norm2(a) > tol) return false;
            }
        }
    return true;
}

}  // namespace geovec
