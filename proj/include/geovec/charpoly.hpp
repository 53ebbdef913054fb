#pragma once

#include <stdexcept>
#include <vector>

#include "geovec/linalg.hpp"

namespace geovec {

// Characteristic polynomial det(tI - M) by the Faddeev-LeVerrier recurrence
// (division-free except for exact integer divisions). Coefficients returned
// lowest degree first, monic: coeffs[n] = 1.
template <typename S>
std::vector<S> charpoly(const Mat<S>& M) {
    if (M.rows != M.cols) throw std::invalid_argument("characteristic polynomial needs a square matrix");
    const int n = M.rows;
    std::vector<S> coeffs(n + 1, scalar_traits<S>::zero());
    coeffs[n] = scalar_traits<S>::one();
    Mat<S> Mk = M;  // M * B_{k-1}
    for (int k = 1; k <= n; ++k) {
        S tr = scalar_traits<S>::zero();
        for (int i = 0; i < n; ++i) tr += Mk(i, i);
        S ck = -tr / scalar_traits<S>::from_int(k);
        coeffs[n - k] = ck;
        if (k == n) break;
        for (int i = 0; i < n; ++i) Mk(i, i) += ck;
        Mk = M * Mk;
    }
    return coeffs;
}

namespace poly {

inline int degree(const std::vector<mpz_class>& p) {
    for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i)
        if (p[i] != 0) return i;
    return -1;
}

inline std::vector<mpz_class> derivative(const std::vector<mpz_class>& p) {
    if (p.size() <= 1) return {mpz_class(0)};
    std::vector<mpz_class> d(p.size() - 1);
    for (std::size_t i = 1; i < p.size(); ++i) d[i - 1] = mpz_class(i) * p[i];
    return d;
}

inline mpz_class content(const std::vector<mpz_class>& p) {
    mpz_class g = 0;
    for (const auto& c : p) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    return g == 0 ? mpz_class(1) : g;
}

// Pseudo-remainder prem(f, g): lc(g)^(deg f - deg g + 1) f = q g + prem.
inline std::vector<mpz_class> pseudo_rem(std::vector<mpz_class> f, const std::vector<mpz_class>& g) {
    int df = degree(f), dg = degree(g);
    if (dg < 0) throw std::invalid_argument("pseudo-division by zero polynomial");
    const mpz_class& lg = g[dg];
    int steps = df - dg + 1;
    while (df >= dg && degree(f) >= 0) {
        mpz_class lf = f[df];
        for (int i = 0; i <= df; ++i) f[i] *= lg;
        for (int i = 0; i <= dg; ++i) f[df - dg + i] -= lf * g[i];
        --steps;
        int ndf = -1;
        for (int i = df; i >= 0; --i)
            if (f[i] != 0) { ndf = i; break; }
        df = ndf;
        if (df < dg) break;
    }
    // remaining scale factor so the full lc(g)^(delta+1) premultiplication holds
    for (int s = 0; s < steps; ++s)
        for (auto& c : f) c *= lg;
    f.resize(std::max(degree(f) + 1, 1));
    return f;
}

inline mpz_class ipow(const mpz_class& base, int e) {
    mpz_class out = 1;
    for (int i = 0; i < e; ++i) out *= base;
    return out;
}

inline std::vector<mpz_class> primitive_part(std::vector<mpz_class> p, mpz_class& cont_out) {
    cont_out = content(p);
    if (degree(p) >= 0 && p[degree(p)] < 0) cont_out = -cont_out;
    for (auto& c : p) {
        mpz_class q;
        mpz_divexact(q.get_mpz_t(), c.get_mpz_t(), cont_out.get_mpz_t());
        c = q;
    }
    return p;
}

// Resultant of integer polynomials via the subresultant PRS (fraction-free;
// coefficient growth stays polynomially bounded). Cohen, Algorithm 3.3.7.
inline mpz_class resultant(std::vector<mpz_class> A, std::vector<mpz_class> B) {
    int da = degree(A), db = degree(B);
    if (da < 0 || db < 0) return 0;
    if (da == 0 && db == 0) return 1;
    int sgn = 1;
    if (da < db) {
        std::swap(A, B);
        std::swap(da, db);
        if (da % 2 == 1 && db % 2 == 1) sgn = -sgn;
    }
    if (db == 0) return sgn * ipow(B[0], da);
    mpz_class ca, cb;
    A = primitive_part(std::move(A), ca);
    B = primitive_part(std::move(B), cb);
    mpz_class t = ipow(ca, db) * ipow(cb, da);
    mpz_class g = 1, h = 1;
    while (true) {
        da = degree(A);
        db = degree(B);
        int d = da - db;
        if (da % 2 == 1 && db % 2 == 1) sgn = -sgn;
        std::vector<mpz_class> R = pseudo_rem(A, B);
        if (degree(R) < 0) return 0;  // nontrivial gcd
        A = std::move(B);
        mpz_class divisor = g * ipow(h, d);
        for (auto& c : R) {
            mpz_class q;
            mpz_divexact(q.get_mpz_t(), c.get_mpz_t(), divisor.get_mpz_t());
            c = q;
        }
        B = std::move(R);
        g = A[degree(A)];
        if (d > 0) {
            // h <- g^d / h^(d-1), exact
            mpz_class num = ipow(g, d), den = ipow(h, d - 1), q;
            mpz_divexact(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
            h = q;
        }
        if (degree(B) == 0) {
            int dA = degree(A);
            // h <- lc(B)^deg(A) / h^(deg(A)-1)
            mpz_class num = ipow(B[0], dA);
            if (dA >= 1) {
                mpz_class den = ipow(h, dA - 1), q;
                mpz_divexact(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
                return sgn * t * q;
            }
            return sgn * t * ipow(h, 1 - dA) * num;
        }
    }
}

}  // namespace poly

// Discriminant of a rational-coefficient polynomial (lowest degree first),
// exact: disc = (-1)^{n(n-1)/2} Res(p, p') / lc(p). Exactness is the point;
// there is deliberately no float overload.
inline Rat poly_discriminant(const std::vector<Rat>& p) {
    int n = -1;
    for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i)
        if (p[i] != 0) { n = i; break; }
    if (n < 1) throw std::invalid_argument("discriminant needs degree >= 1");
    // clear denominators: P = D p has integer coefficients, disc(c p) = c^(2n-2) disc(p)
    mpz_class D = 1;
    for (int i = 0; i <= n; ++i) {
        mpz_class den = p[i].get_den();
        mpz_class g;
        mpz_gcd(g.get_mpz_t(), D.get_mpz_t(), den.get_mpz_t());
        D *= den / g;
    }
    std::vector<mpz_class> P(n + 1);
    for (int i = 0; i <= n; ++i) {
        Rat scaled = p[i] * Rat(D);
        P[i] = scaled.get_num();  // denominator is 1 by construction
    }
    mpz_class res = poly::resultant(P, poly::derivative(P));
    mpz_class lc = P[n];
    int exponent = (n * (n - 1)) / 2;
    Rat disc = Rat(res) / Rat(lc);
    if (exponent % 2 == 1) disc = -disc;
    // undo the clearing: disc(p) = disc(P) / D^(2n-2)
    mpz_class Dp = 1;
    for (int i = 0; i < 2 * n - 2; ++i) Dp *= D;
    disc /= Rat(Dp);
    Rat out = disc;
    out.canonicalize();
    return out;
}

// Discriminant of the characteristic polynomial of M; zero iff M has a
// repeated eigenvalue. Exact backend only.
inline Rat charpoly_discriminant(const Mat<Rat>& M) {
    return poly_discriminant(charpoly(M));
}

// Naive Sylvester-determinant resultant; independent cross-check used by the
// test suite against the subresultant route.
inline Rat sylvester_resultant(const std::vector<Rat>& f, const std::vector<Rat>& g) {
    auto deg = [](const std::vector<Rat>& p) {
        for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i)
            if (p[i] != 0) return i;
        return -1;
    };
    int m = deg(f), n = deg(g);
    if (m < 0 || n < 0) return Rat(0);
    Mat<Rat> S(m + n, m + n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j <= m; ++j) S(i, i + (m - j)) = f[j];
    for (int i = 0; i < m; ++i)
        for (int j = 0; j <= n; ++j) S(n + i, i + (n - j)) = g[j];
    return det(S);
}

}  // namespace geovec
