#pragma once

#include <array>
#include <complex>
#include <stdexcept>
#include <vector>

#include "geovec/inner_product.hpp"
#include "geovec/lie_algebra.hpp"

namespace geovec {
namespace catalog {

// Abelian R^n: all brackets vanish.
inline LieAlgebra<Rat> abelian(int n) { return LieAlgebra<Rat>(n, "abelian" + std::to_string(n)); }

// Heisenberg: [E1,E2] = E3.
inline LieAlgebra<Rat> heisenberg3() {
    LieAlgebra<Rat> g(3, "heis3");
    g.set_bracket(0, 1, 2, Rat(1));
    return g;
}

// 2-dimensional non-unimodular solvable algebra: [E1,E2] = E2.
inline LieAlgebra<Rat> solvable2() {
    LieAlgebra<Rat> g(2, "solv2");
    g.set_bracket(0, 1, 1, Rat(1));
    return g;
}

// su(2) in the cyclic basis [E1,E2]=E3, [E2,E3]=E1, [E3,E1]=E2.
inline LieAlgebra<Rat> su2() {
    LieAlgebra<Rat> g(3, "su2");
    g.set_bracket(0, 1, 2, Rat(1));
    g.set_bracket(1, 2, 0, Rat(1));
    g.set_bracket(0, 2, 1, Rat(-1));
    return g;
}

inline LieAlgebra<Rat> su2su2() {
    auto g = direct_sum(su2(), su2());
    return g;
}

// --- su(3) --------------------------------------------------------------
//
// Basis with rational structure constants (traceless skew-hermitian 3x3):
//   D1 = i(e11 - e22), D2 = i(e22 - e33),
//   A_pq = e_pq - e_qp, B_pq = i(e_pq + e_qp) for pairs (1,2), (1,3), (2,3).
// Structure constants are derived from exact Gaussian-rational commutators.

struct GaussRat {
    Rat re, im;
    GaussRat() : re(0), im(0) {}
    GaussRat(Rat r, Rat i) : re(std::move(r)), im(std::move(i)) {}
};

inline GaussRat operator+(const GaussRat& a, const GaussRat& b) { return {a.re + b.re, a.im + b.im}; }
inline GaussRat operator-(const GaussRat& a, const GaussRat& b) { return {a.re - b.re, a.im - b.im}; }
inline GaussRat operator*(const GaussRat& a, const GaussRat& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

using GMat3 = std::array<std::array<GaussRat, 3>, 3>;

inline GMat3 gmat_zero() { return {}; }

inline GMat3 commutator(const GMat3& x, const GMat3& y) {
    GMat3 z = gmat_zero();
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            for (int k = 0; k < 3; ++k)
                z[i][j] = z[i][j] + (x[i][k] * y[k][j] - y[i][k] * x[k][j]);
    return z;
}

inline std::vector<GMat3> su3_basis_matrices() {
    auto unit = [](int p, int q, Rat re, Rat im) {
        GMat3 m = gmat_zero();
        m[p][q] = GaussRat(std::move(re), std::move(im));
        return m;
    };
    auto add = [](const GMat3& a, const GMat3& b) {
        GMat3 z;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) z[i][j] = a[i][j] + b[i][j];
        return z;
    };
    std::vector<GMat3> basis;
    basis.push_back(add(unit(0, 0, Rat(0), Rat(1)), unit(1, 1, Rat(0), Rat(-1))));  // D1
    basis.push_back(add(unit(1, 1, Rat(0), Rat(1)), unit(2, 2, Rat(0), Rat(-1))));  // D2
    const int pairs[3][2] = {{0, 1}, {0, 2}, {1, 2}};
    for (auto& pq : pairs) {
        int p = pq[0], q = pq[1];
        basis.push_back(add(unit(p, q, Rat(1), Rat(0)), unit(q, p, Rat(-1), Rat(0))));  // A_pq
        basis.push_back(add(unit(p, q, Rat(0), Rat(1)), unit(q, p, Rat(0), Rat(1))));   // B_pq
    }
    return basis;  // order: D1, D2, A12, B12, A13, B13, A23, B23
}

// Expands a traceless skew-hermitian Gaussian-rational matrix in the basis above.
inline Vec<Rat> su3_expand(const GMat3& m) {
    Vec<Rat> v(8, Rat(0));
    // diagonal: i*(d1,d2,d3) with d1+d2+d3 = 0 gives D-coefficients (d1, -d3)
    v[0] = m[0][0].im;
    v[1] = -m[2][2].im;
    const int off[3][2] = {{0, 1}, {0, 2}, {1, 2}};
    for (int t = 0; t < 3; ++t) {
        int p = off[t][0], q = off[t][1];
        v[2 + 2 * t] = m[p][q].re;  // A_pq coefficient
        v[3 + 2 * t] = m[p][q].im;  // B_pq coefficient
    }
    return v;
}

inline LieAlgebra<Rat> su3() {
    auto basis = su3_basis_matrices();
    LieAlgebra<Rat> g(8, "su3");
    for (int i = 0; i < 8; ++i)
        for (int j = i + 1; j < 8; ++j) {
            auto coords = su3_expand(commutator(basis[i], basis[j]));
            for (int k = 0; k < 8; ++k)
                if (coords[k] != 0) g.set_bracket(i, j, k, coords[k]);
        }
    return g;
}

// --- metrics --------------------------------------------------------------

// su(2) with the frame {aE1, bE2, cE3} orthonormal: gram diag(1/a^2,1/b^2,1/c^2).
template <typename S>
MetricLieAlgebra<S> diagonal_su2(const S& a, const S& b, const S& c) {
    if (!(a > scalar_traits<S>::zero() && b > scalar_traits<S>::zero() && c > scalar_traits<S>::zero()))
        throw std::invalid_argument("diagonal metric parameters must be positive");
    LieAlgebra<S> g = [] {
        if constexpr (scalar_traits<S>::is_exact) return su2();
        else return su2().to_float();
    }();
    Mat<S> A(3, 3);
    A(0, 0) = a; A(1, 1) = b; A(2, 2) = c;
    return MetricLieAlgebra<S>(std::move(g), from_lower_triangular(A));
}

// su(2) with gram diag(g1,g2,g3) directly (the "inertia tensor" form).
template <typename S>
MetricLieAlgebra<S> su2_gram_diag(const S& g1, const S& g2, const S& g3) {
    LieAlgebra<S> g = [] {
        if constexpr (scalar_traits<S>::is_exact) return su2();
        else return su2().to_float();
    }();
    Mat<S> G(3, 3);
    G(0, 0) = g1; G(1, 1) = g2; G(2, 2) = g3;
    return MetricLieAlgebra<S>(std::move(g), InnerProduct<S>(std::move(G)));
}

// The su(2)+su(2) frame matrix with parameter d (lower triangular, diag > 0).
template <typename S>
Mat<S> su2su2_frame(const S& d) {
    Mat<S> A = Mat<S>::identity(6);
    A(3, 0) = scalar_traits<S>::one();
    A(4, 0) = scalar_traits<S>::one();
    A(5, 0) = d;
    A(5, 1) = scalar_traits<S>::one();
    A(5, 2) = scalar_traits<S>::one();
    A(5, 5) = d;
    return A;
}

template <typename S>
MetricLieAlgebra<S> su2su2_metric(const S& d) {
    if (!(d > scalar_traits<S>::zero())) throw std::invalid_argument("d must be positive");
    LieAlgebra<S> g = [] {
        if constexpr (scalar_traits<S>::is_exact) return su2su2();
        else return su2su2().to_float();
    }();
    return MetricLieAlgebra<S>(std::move(g), from_lower_triangular(su2su2_frame(d)));
}

}  // namespace catalog
}  // namespace geovec
