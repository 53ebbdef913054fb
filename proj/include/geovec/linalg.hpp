#pragma once

#include <algorithm>
#include <cassert>
#include <cmath>
#include <optional>
#include <stdexcept>
#include <vector>

#include "geovec/rational.hpp"

namespace geovec {

template <typename S>
using Vec = std::vector<S>;

template <typename S>
struct Mat {
    int rows = 0;
    int cols = 0;
    std::vector<S> a;

    Mat() = default;
    Mat(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c, scalar_traits<S>::zero()) {}

    S& operator()(int i, int j) { return a[static_cast<std::size_t>(i) * cols + j]; }
    const S& operator()(int i, int j) const { return a[static_cast<std::size_t>(i) * cols + j]; }

    static Mat identity(int n) {
        Mat m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = scalar_traits<S>::one();
        return m;
    }

    bool operator==(const Mat& o) const { return rows == o.rows && cols == o.cols && a == o.a; }
};

template <typename S>
Mat<S> transpose(const Mat<S>& m) {
    Mat<S> t(m.cols, m.rows);
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j) t(j, i) = m(i, j);
    return t;
}

template <typename S>
Mat<S> operator*(const Mat<S>& x, const Mat<S>& y) {
    assert(x.cols == y.rows);
    Mat<S> z(x.rows, y.cols);
    for (int i = 0; i < x.rows; ++i)
        for (int k = 0; k < x.cols; ++k) {
            const S& xik = x(i, k);
            if (scalar_traits<S>::is_exact && xik == scalar_traits<S>::zero()) continue;
            for (int j = 0; j < y.cols; ++j) z(i, j) += xik * y(k, j);
        }
    return z;
}

template <typename S>
Mat<S> operator+(const Mat<S>& x, const Mat<S>& y) {
    assert(x.rows == y.rows && x.cols == y.cols);
    Mat<S> z = x;
    for (std::size_t i = 0; i < z.a.size(); ++i) z.a[i] += y.a[i];
    return z;
}

template <typename S>
Mat<S> operator-(const Mat<S>& x, const Mat<S>& y) {
    assert(x.rows == y.rows && x.cols == y.cols);
    Mat<S> z = x;
    for (std::size_t i = 0; i < z.a.size(); ++i) z.a[i] -= y.a[i];
    return z;
}

template <typename S>
Mat<S> operator*(const S& c, const Mat<S>& m) {
    Mat<S> z = m;
    for (auto& v : z.a) v *= c;
    return z;
}

template <typename S>
Vec<S> mat_vec(const Mat<S>& m, const Vec<S>& v) {
    assert(static_cast<int>(v.size()) == m.cols);
    Vec<S> out(m.rows, scalar_traits<S>::zero());
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j) out[i] += m(i, j) * v[j];
    return out;
}

template <typename S>
Vec<S> vec_add(const Vec<S>& x, const Vec<S>& y) {
    assert(x.size() == y.size());
    Vec<S> z = x;
    for (std::size_t i = 0; i < z.size(); ++i) z[i] += y[i];
    return z;
}

template <typename S>
Vec<S> vec_sub(const Vec<S>& x, const Vec<S>& y) {
    assert(x.size() == y.size());
    Vec<S> z = x;
    for (std::size_t i = 0; i < z.size(); ++i) z[i] -= y[i];
    return z;
}

template <typename S>
Vec<S> vec_scale(const S& c, const Vec<S>& x) {
    Vec<S> z = x;
    for (auto& v : z) v *= c;
    return z;
}

template <typename S>
S dot(const Vec<S>& x, const Vec<S>& y) {
    assert(x.size() == y.size());
    S s = scalar_traits<S>::zero();
    for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
    return s;
}

template <typename S>
Vec<S> zero_vec(int n) {
    return Vec<S>(static_cast<std::size_t>(n), scalar_traits<S>::zero());
}

template <typename S>
Vec<S> basis_vec(int n, int i) {
    Vec<S> v = zero_vec<S>(n);
    v[i] = scalar_traits<S>::one();
    return v;
}

template <typename S>
bool is_zero_vec(const Vec<S>& v, double tol = 0.0) {
    for (const auto& x : v) {
        if constexpr (scalar_traits<S>::is_exact) {
            if (x != scalar_traits<S>::zero()) return false;
        } else {
            if (std::fabs(to_double(x)) > tol) return false;
        }
    }
    return true;
}

inline double norm2(const Vec<double>& v) { return std::sqrt(dot(v, v)); }

inline double norm_inf(const Vec<double>& v) {
    double m = 0;
    for (double x : v) m = std::max(m, std::fabs(x));
    return m;
}

template <typename S>
S norm_inf_exactable(const Vec<S>& v) {
    S m = scalar_traits<S>::zero();
    for (const auto& x : v) {
        S ax = scalar_traits<S>::abs(x);
        if (ax > m) m = ax;
    }
    return m;
}

// --- elimination kernel -----------------------------------------------------
//
// Fraction-free (Bareiss) elimination on the exact backend; on the float
// backend the same routine runs with partial pivoting and a zero tolerance.
// Row-echelon output carries pivot columns so rank / kernel / solve all share
// one code path.

template <typename S>
struct Echelon {
    Mat<S> m;                 // reduced rows
    std::vector<int> pivots;  // pivot column per used row
    int rank = 0;
    int sign = 1;  // permutation sign (for determinants)
};

template <typename S>
Echelon<S> echelon(Mat<S> m, double tol = 1e-10) {
    Echelon<S> e;
    const int rows = m.rows, cols = m.cols;
    int r = 0;
    S prev = scalar_traits<S>::one();
    e.sign = 1;
    for (int c = 0; c < cols && r < rows; ++c) {
        int piv = -1;
        if constexpr (scalar_traits<S>::is_exact) {
            for (int i = r; i < rows; ++i)
                if (m(i, c) != scalar_traits<S>::zero()) { piv = i; break; }
        } else {
            double best = tol;
            for (int i = r; i < rows; ++i) {
                double mag = std::fabs(to_double(m(i, c)));
                if (mag > best) { best = mag; piv = i; }
            }
        }
        if (piv < 0) continue;
        if (piv != r) {
            for (int j = 0; j < cols; ++j) std::swap(m(r, j), m(piv, j));
            e.sign = -e.sign;
        }
        for (int i = r + 1; i < rows; ++i) {
            for (int j = 0; j < cols; ++j) {
                if (j == c) continue;
                // Bareiss step: exact division by the previous pivot.
                m(i, j) = (m(r, c) * m(i, j) - m(i, c) * m(r, j)) / prev;
            }
            m(i, c) = scalar_traits<S>::zero();
        }
        prev = m(r, c);
        e.pivots.push_back(c);
        ++r;
    }
    e.rank = r;
    e.m = std::move(m);
    return e;
}

template <typename S>
int rank(const Mat<S>& m, double tol = 1e-10) {
    return echelon(m, tol).rank;
}

template <typename S>
S det(const Mat<S>& m, double tol = 1e-10) {
    assert(m.rows == m.cols);
    auto e = echelon(m, tol);
    if (e.rank < m.rows) return scalar_traits<S>::zero();
    // The Bareiss chain telescopes: the last pivot is det (up to row swaps).
    S d = e.m(m.rows - 1, e.pivots[m.rows - 1]);
    if (e.sign < 0) d = -d;
    return d;
}

// One solution of a consistent linear system (free variables set to zero).
// Returns nullopt when inconsistent.
template <typename S>
std::optional<Vec<S>> solve_any(const Mat<S>& A, const Vec<S>& b, double tol = 1e-10) {
    const int n = A.cols;
    Mat<S> aug(A.rows, n + 1);
    for (int i = 0; i < A.rows; ++i) {
        for (int j = 0; j < n; ++j) aug(i, j) = A(i, j);
        aug(i, n) = b[i];
    }
    auto e = echelon(aug, tol);
    for (int i = 0; i < e.rank; ++i)
        if (e.pivots[i] == n) return std::nullopt;  // pivot in rhs column
    Vec<S> x = zero_vec<S>(n);
    for (int i = e.rank - 1; i >= 0; --i) {
        int pc = e.pivots[i];
        S s = e.m(i, n);
        for (int j = pc + 1; j < n; ++j) s -= e.m(i, j) * x[j];
        x[pc] = s / e.m(i, pc);
    }
    return x;
}

// Unique solution of a nonsingular square system.
template <typename S>
Vec<S> solve(const Mat<S>& A, const Vec<S>& b, double tol = 1e-10) {
    assert(A.rows == A.cols);
    auto x = solve_any(A, b, tol);
    if (!x) throw std::runtime_error("singular linear system");
    return *x;
}

template <typename S>
Mat<S> inverse(const Mat<S>& A, double tol = 1e-10) {
    assert(A.rows == A.cols);
    const int n = A.rows;
    Mat<S> inv(n, n);
    for (int j = 0; j < n; ++j) {
        auto col = solve(A, basis_vec<S>(n, j), tol);
        for (int i = 0; i < n; ++i) inv(i, j) = col[i];
    }
    return inv;
}

// Basis of the kernel {x : Ax = 0}.
template <typename S>
std::vector<Vec<S>> kernel_basis(const Mat<S>& A, double tol = 1e-10) {
    auto e = echelon(A, tol);
    const int n = A.cols;
    std::vector<bool> is_pivot(n, false);
    for (int c : e.pivots) is_pivot[c] = true;
    std::vector<Vec<S>> basis;
    for (int fc = 0; fc < n; ++fc) {
        if (is_pivot[fc]) continue;
        Vec<S> x = zero_vec<S>(n);
        x[fc] = scalar_traits<S>::one();
        for (int i = e.rank - 1; i >= 0; --i) {
            int pc = e.pivots[i];
            S s = scalar_traits<S>::zero();
            for (int j = pc + 1; j < n; ++j) s -= e.m(i, j) * x[j];
            x[pc] = s / e.m(i, pc);
        }
        basis.push_back(std::move(x));
    }
    return basis;
}

template <typename S>
Mat<S> rows_to_mat(const std::vector<Vec<S>>& rows) {
    if (rows.empty()) return Mat<S>(0, 0);
    Mat<S> m(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j) m(i, j) = rows[i][j];
    return m;
}

template <typename S>
bool linearly_independent(const std::vector<Vec<S>>& vs, double tol = 1e-10) {
    if (vs.empty()) return true;
    return rank(rows_to_mat(vs), tol) == static_cast<int>(vs.size());
}

// Leading principal minors, exact; positive-definiteness gate for Rat grams.
template <typename S>
std::vector<S> leading_principal_minors(const Mat<S>& m) {
    assert(m.rows == m.cols);
    std::vector<S> out;
    for (int k = 1; k <= m.rows; ++k) {
        Mat<S> sub(k, k);
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j) sub(i, j) = m(i, j);
        out.push_back(det(sub));
    }
    return out;
}

// Cholesky factor, lower triangular: A = L L^T. Fails on non-PD input.
inline std::optional<Mat<double>> cholesky(const Mat<double>& A) {
    const int n = A.rows;
    Mat<double> L(n, n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j <= i; ++j) {
            double s = A(i, j);
            for (int k = 0; k < j; ++k) s -= L(i, k) * L(j, k);
            if (i == j) {
                if (s <= 0) return std::nullopt;
                L(i, i) = std::sqrt(s);
            } else {
                L(i, j) = s / L(j, j);
            }
        }
    }
    return L;
}

// Cyclic Jacobi eigensolver for symmetric matrices. Returns (values, vectors);
// column k of the vector matrix is the eigenvector for values[k].
inline std::pair<Vec<double>, Mat<double>> jacobi_eigen(Mat<double> A, int max_sweeps = 64) {
    const int n = A.rows;
    Mat<double> V = Mat<double>::identity(n);
    for (int sweep = 0; sweep < max_sweeps; ++sweep) {
        double off = 0;
        for (int p = 0; p < n; ++p)
            for (int q = p + 1; q < n; ++q) off += A(p, q) * A(p, q);
        if (off < 1e-30) break;
        for (int p = 0; p < n; ++p) {
            for (int q = p + 1; q < n; ++q) {
                if (std::fabs(A(p, q)) < 1e-300) continue;
                double theta = (A(q, q) - A(p, p)) / (2 * A(p, q));
                double t = (theta >= 0 ? 1.0 : -1.0) / (std::fabs(theta) + std::sqrt(theta * theta + 1));
                double c = 1.0 / std::sqrt(t * t + 1), s = t * c;
                for (int k = 0; k < n; ++k) {
                    double akp = A(k, p), akq = A(k, q);
                    A(k, p) = c * akp - s * akq;
                    A(k, q) = s * akp + c * akq;
                }
                for (int k = 0; k < n; ++k) {
                    double apk = A(p, k), aqk = A(q, k);
                    A(p, k) = c * apk - s * aqk;
                    A(q, k) = s * apk + c * aqk;
                }
                for (int k = 0; k < n; ++k) {
                    double vkp = V(k, p), vkq = V(k, q);
                    V(k, p) = c * vkp - s * vkq;
                    V(k, q) = s * vkp + c * vkq;
                }
            }
        }
    }
    Vec<double> vals(n);
    for (int i = 0; i < n; ++i) vals[i] = A(i, i);
    return {vals, V};
}

// Minimum-norm least-squares solution of A z = b.
// Exact backend: z = N y with N^2 y = N^T b, N = A^T A (z is the pseudo-inverse
// solution; unique because range(N) is orthogonal to ker(A)).
// Float backend: spectral pseudo-inverse of the normal equations.
template <typename S>
Vec<S> least_squares_min_norm(const Mat<S>& A, const Vec<S>& b, double tol = 1e-12) {
    const int n = A.cols;
    if (n == 0) return {};
    Mat<S> At = transpose(A);
    Mat<S> N = At * A;
    Vec<S> c = mat_vec(At, b);
    if constexpr (scalar_traits<S>::is_exact) {
        Mat<S> N2 = N * N;
        auto y = solve_any(N2, c);
        if (!y) throw std::runtime_error("inconsistent normal equations");
        return mat_vec(N, *y);
    } else {
        auto [vals, V] = jacobi_eigen(N);
        double vmax = 0;
        for (double v : vals) vmax = std::max(vmax, std::fabs(v));
        double cut = std::max(tol * std::max(vmax, 1.0), 1e-300);
        Vec<S> z = zero_vec<S>(n);
        for (int k = 0; k < n; ++k) {
            if (std::fabs(vals[k]) <= cut) continue;
            double coef = 0;
            for (int i = 0; i < n; ++i) coef += V(i, k) * c[i];
            coef /= vals[k];
            for (int i = 0; i < n; ++i) z[i] += coef * V(i, k);
        }
        return z;
    }
}

template <typename S>
Mat<double> to_float(const Mat<S>& m) {
    Mat<double> f(m.rows, m.cols);
    for (std::size_t i = 0; i < m.a.size(); ++i) f.a[i] = to_double(m.a[i]);
    return f;
}

template <typename S>
Vec<double> to_float(const Vec<S>& v) {
    Vec<double> f(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) f[i] = to_double(v[i]);
    return f;
}

}  // namespace geovec
