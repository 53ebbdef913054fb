#pragma once

#include <complex>
#include <stdexcept>
#include <vector>

#include "geovec/linalg.hpp"

namespace geovec {

using Cplx = std::complex<double>;

struct CMat {
    int n = 0;
    std::vector<Cplx> a;

    CMat() = default;
    explicit CMat(int n_) : n(n_), a(static_cast<std::size_t>(n_) * n_, Cplx(0, 0)) {}

    Cplx& operator()(int i, int j) { return a[static_cast<std::size_t>(i) * n + j]; }
    const Cplx& operator()(int i, int j) const { return a[static_cast<std::size_t>(i) * n + j]; }

    static CMat identity(int n) {
        CMat m(n);
        for (int i = 0; i < n; ++i) m(i, i) = 1.0;
        return m;
    }
};

inline CMat operator*(const CMat& x, const CMat& y) {
    CMat z(x.n);
    for (int i = 0; i < x.n; ++i)
        for (int k = 0; k < x.n; ++k) {
            Cplx xik = x(i, k);
            if (xik == Cplx(0, 0)) continue;
            for (int j = 0; j < x.n; ++j) z(i, j) += xik * y(k, j);
        }
    return z;
}

inline CMat operator+(const CMat& x, const CMat& y) {
    CMat z = x;
    for (std::size_t i = 0; i < z.a.size(); ++i) z.a[i] += y.a[i];
    return z;
}

inline CMat operator-(const CMat& x, const CMat& y) {
    CMat z = x;
    for (std::size_t i = 0; i < z.a.size(); ++i) z.a[i] -= y.a[i];
    return z;
}

inline CMat operator*(Cplx c, const CMat& m) {
    CMat z = m;
    for (auto& v : z.a) v *= c;
    return z;
}

inline CMat adjoint(const CMat& m) {
    CMat z(m.n);
    for (int i = 0; i < m.n; ++i)
        for (int j = 0; j < m.n; ++j) z(i, j) = std::conj(m(j, i));
    return z;
}

inline CMat commutator(const CMat& x, const CMat& y) { return x * y - y * x; }

inline double frob_norm(const CMat& m) {
    double s = 0;
    for (const auto& v : m.a) s += std::norm(v);
    return std::sqrt(s);
}

inline double one_norm(const CMat& m) {
    double best = 0;
    for (int j = 0; j < m.n; ++j) {
        double s = 0;
        for (int i = 0; i < m.n; ++i) s += std::abs(m(i, j));
        best = std::max(best, s);
    }
    return best;
}

// Deviation from unitarity: ||g* g - I||_F.
inline double unitarity_defect(const CMat& g) {
    CMat d = adjoint(g) * g - CMat::identity(g.n);
    return frob_norm(d);
}

inline double hermiticity_defect(const CMat& m) {
    CMat d = m + adjoint(m);  // skew-hermitian test: m* = -m
    return frob_norm(d);
}

// Matrix exponential, scaling and squaring with a fixed-order (6,6) Pade
// approximant; ample accuracy for the small skew-hermitian generators here.
inline CMat expm(const CMat& A) {
    const int n = A.n;
    double nrm = one_norm(A);
    int squarings = 0;
    double scale = 1.0;
    while (nrm * scale > 0.5) {
        scale *= 0.5;
        ++squarings;
    }
    CMat As = Cplx(scale, 0) * A;
    // Pade(6,6): N = sum c_k As^k, D = sum (-1)^k c_k As^k
    static const double c[7] = {1.0, 0.5, 5.0 / 44.0, 1.0 / 66.0, 1.0 / 792.0, 1.0 / 15840.0,
                                1.0 / 665280.0};
    CMat power = CMat::identity(n), N(n), D(n);
    for (int k = 0; k <= 6; ++k) {
        if (k > 0) power = power * As;
        CMat term = Cplx(c[k], 0) * power;
        N = N + term;
        if (k % 2 == 0) D = D + term; else D = D - term;
    }
    // solve D X = N column by column (complex gaussian elimination)
    CMat X(n);
    {
        CMat M = D;
        CMat R = N;
        for (int col = 0; col < n; ++col) {
            // partial pivot
            int piv = col;
            for (int i = col + 1; i < n; ++i)
                if (std::abs(M(i, col)) > std::abs(M(piv, col))) piv = i;
            if (std::abs(M(piv, col)) < 1e-300) throw std::runtime_error("singular pade denominator");
            if (piv != col)
                for (int j = 0; j < n; ++j) {
                    std::swap(M(col, j), M(piv, j));
                    std::swap(R(col, j), R(piv, j));
                }
            for (int i = col + 1; i < n; ++i) {
                Cplx f = M(i, col) / M(col, col);
                for (int j = col; j < n; ++j) M(i, j) -= f * M(col, j);
                for (int j = 0; j < n; ++j) R(i, j) -= f * R(col, j);
            }
        }
        for (int col = n - 1; col >= 0; --col) {
            for (int j = 0; j < n; ++j) {
                Cplx s = R(col, j);
                for (int k = col + 1; k < n; ++k) s -= M(col, k) * X(k, j);
                X(col, j) = s / M(col, col);
            }
        }
    }
    for (int s = 0; s < squarings; ++s) X = X * X;
    return X;
}

// Eigen-decomposition of a hermitian matrix via the realification
// [[Re, -Im], [Im, Re]] and the symmetric Jacobi solver. Each eigenvalue of H
// appears twice in the doubled problem; pairs are merged back.
struct HermitianEigen {
    Vec<double> values;          // ascending
    std::vector<std::vector<Cplx>> vectors;  // same order, unit vectors
};

inline HermitianEigen hermitian_eigen(const CMat& H) {
    const int n = H.n;
    Mat<double> R(2 * n, 2 * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            R(i, j) = H(i, j).real();
            R(i, j + n) = -H(i, j).imag();
            R(i + n, j) = H(i, j).imag();
            R(i + n, j + n) = H(i, j).real();
        }
    auto [vals, V] = jacobi_eigen(R);
    std::vector<int> order(2 * n);
    for (int i = 0; i < 2 * n; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](int a, int b) { return vals[a] < vals[b]; });
    HermitianEigen out;
    for (int t = 0; t < 2 * n; t += 2) {  // doubled spectrum: take every other
        int k = order[t];
        out.values.push_back(vals[k]);
        std::vector<Cplx> v(n);
        double nrm = 0;
        for (int i = 0; i < n; ++i) {
            v[i] = Cplx(V(i, k), V(i + n, k));
            nrm += std::norm(v[i]);
        }
        nrm = std::sqrt(nrm);
        if (nrm > 1e-300)
            for (auto& x : v) x /= nrm;
        out.vectors.push_back(std::move(v));
    }
    return out;
}

}  // namespace geovec
