#pragma once

#include <optional>
#include <stdexcept>
#include <utility>

#include "geovec/lie_algebra.hpp"
#include "geovec/linalg.hpp"

namespace geovec {

// Inner product on the algebra's reference basis: (x,y) = x^T G y.
// Symmetry and positive definiteness are enforced at construction
// (leading principal minors on the exact backend, Cholesky on floats).
template <typename S>
class InnerProduct {
public:
    explicit InnerProduct(Mat<S> gram) : gram_(std::move(gram)) {
        if (gram_.rows != gram_.cols) throw std::invalid_argument("gram matrix must be square");
        for (int i = 0; i < gram_.rows; ++i)
            for (int j = i + 1; j < gram_.cols; ++j)
                if constexpr (scalar_traits<S>::is_exact) {
                    if (gram_(i, j) != gram_(j, i)) throw std::invalid_argument("gram matrix must be symmetric");
                } else {
                    if (std::fabs(to_double(gram_(i, j)) - to_double(gram_(j, i))) > 1e-12)
                        throw std::invalid_argument("gram matrix must be symmetric");
                }
        if constexpr (scalar_traits<S>::is_exact) {
            auto minors = leading_principal_minors(gram_);
            for (std::size_t k = 0; k < minors.size(); ++k)
                if (!(minors[k] > scalar_traits<S>::zero()))
                    throw std::invalid_argument("gram matrix not positive definite (minor " +
                                                std::to_string(k + 1) + ")");
        } else {
            if (!cholesky(geovec::to_float(gram_)))
                throw std::invalid_argument("gram matrix not positive definite");
        }
        inv_ = inverse(gram_);
    }

    int dim() const { return gram_.rows; }
    const Mat<S>& gram() const { return gram_; }
    const Mat<S>& gram_inv() const { return inv_; }

    S ip(const Vec<S>& x, const Vec<S>& y) const {
        S s = scalar_traits<S>::zero();
        for (int i = 0; i < gram_.rows; ++i) {
            if (scalar_traits<S>::is_exact && x[i] == scalar_traits<S>::zero()) continue;
            for (int j = 0; j < gram_.cols; ++j) s += x[i] * gram_(i, j) * y[j];
        }
        return s;
    }

    // Metric dual: the unique v with (v, y) = w^T y for all y.
    Vec<S> raise(const Vec<S>& w) const { return mat_vec(inv_, w); }

    // The frame rows F_i = sum_j A_ij E_j when the product was built from a
    // lower-triangular frame; used for exact orthonormal-frame computations.
    const std::optional<Mat<S>>& orthonormal_frame() const { return frame_; }
    void set_orthonormal_frame(Mat<S> f) { frame_ = std::move(f); }

    InnerProduct<double> to_float() const {
        InnerProduct<double> ip(geovec::to_float(gram_));
        if (frame_) ip.set_orthonormal_frame(geovec::to_float(*frame_));
        return ip;
    }

private:
    Mat<S> gram_;
    Mat<S> inv_;
    std::optional<Mat<S>> frame_;
};

// The unique G with A G A^T = I: the frame F_i = sum_j A_ij E_j becomes
// orthonormal. A must be lower triangular with positive diagonal.
template <typename S>
InnerProduct<S> from_lower_triangular(const Mat<S>& A) {
    if (A.rows != A.cols) throw std::invalid_argument("frame matrix must be square");
    for (int i = 0; i < A.rows; ++i) {
        if (!(A(i, i) > scalar_traits<S>::zero()))
            throw std::invalid_argument("frame diagonal must be positive");
        for (int j = i + 1; j < A.cols; ++j)
            if (!scalar_traits<S>::is_zero(A(i, j)))
                throw std::invalid_argument("frame matrix must be lower triangular");
    }
    Mat<S> G = inverse(transpose(A) * A);
    InnerProduct<S> ip(std::move(G));
    ip.set_orthonormal_frame(A);
    return ip;
}

// Extracts the lower-triangular A with A G A^T = I back from the gram matrix.
// Requires the Cholesky pivots to stay rational on the exact backend.
template <typename S>
std::optional<Mat<S>> lower_triangular_frame(const InnerProduct<S>& p) {
    // G^-1 = A^T A with A lower triangular <=> reversed-order Cholesky.
    const int n = p.dim();
    Mat<S> M = p.gram_inv();
    Mat<S> A(n, n);
    // Solve A^T A = M for lower-triangular A bottom-up: A's last row involves
    // M(n-1,n-1) first. Work on the reversed-index matrix so plain Cholesky applies.
    Mat<S> R(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) R(i, j) = M(n - 1 - i, n - 1 - j);
    // plain lower Cholesky of R with exact square roots
    Mat<S> L(n, n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j <= i; ++j) {
            S s = R(i, j);
            for (int k = 0; k < j; ++k) s -= L(i, k) * L(j, k);
            if (i == j) {
                if constexpr (scalar_traits<S>::is_exact) {
                    // rational square root or fail
                    if (s <= scalar_traits<S>::zero()) return std::nullopt;
                    Rat q = s;
                    mpz_class num = q.get_num(), den = q.get_den(), rn, rd;
                    if (!mpz_root(rn.get_mpz_t(), num.get_mpz_t(), 2)) return std::nullopt;
                    if (!mpz_root(rd.get_mpz_t(), den.get_mpz_t(), 2)) return std::nullopt;
                    L(i, i) = Rat(rn, rd);
                } else {
                    if (s <= 0) return std::nullopt;
                    L(i, i) = std::sqrt(to_double(s));
                }
            } else {
                L(i, j) = s / L(j, j);
            }
        }
    }
    // A = P L^T P for the index-reversal P: lower triangular again.
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) A(i, j) = L(n - 1 - j, n - 1 - i);
    return A;
}

// (X,Y) = base(X,Y) + alpha * base(X,V) * base(Y,V); gram G' = G + a (GV)(GV)^T.
template <typename S>
InnerProduct<S> rank_one_perturbation(const InnerProduct<S>& base, const Vec<S>& V, const S& alpha) {
    if (!(alpha > scalar_traits<S>::zero()) && !scalar_traits<S>::is_zero(alpha))
        throw std::invalid_argument("perturbation strength must be positive");
    Vec<S> gv = mat_vec(base.gram(), V);
    Mat<S> G = base.gram();
    for (int i = 0; i < G.rows; ++i)
        for (int j = 0; j < G.cols; ++j) G(i, j) += alpha * gv[i] * gv[j];
    return InnerProduct<S>(std::move(G));
}

// Bi-invariant reference metric -1/2 B; positive definite only on compact
// semisimple algebras (construction throws otherwise).
template <typename S>
InnerProduct<S> minus_half_killing(const LieAlgebra<S>& g) {
    Mat<S> K = g.killing_gram();
    S half = scalar_traits<S>::from_ratio(-1, 2);
    for (auto& v : K.a) v *= half;
    return InnerProduct<S>(std::move(K));
}

template <typename S>
struct MetricLieAlgebra {
    LieAlgebra<S> algebra;
    InnerProduct<S> metric;

    MetricLieAlgebra(LieAlgebra<S> g, InnerProduct<S> ip)
        : algebra(std::move(g)), metric(std::move(ip)) {
        if (algebra.dim() != metric.dim())
            throw std::invalid_argument("algebra/metric dimension mismatch");
    }

    int dim() const { return algebra.dim(); }

    MetricLieAlgebra<double> to_float() const {
        return {algebra.to_float(), metric.to_float()};
    }
};

// Simultaneous basis: vectors E'_i orthonormal for the bi-invariant -1/2 B and
// orthogonal for the given metric, with (E'_i,E'_i) = mu_i. Generalized
// symmetric eigenproblem G v = mu K v.
template <typename S>
struct SimultaneousBasis {
    std::vector<Vec<S>> basis;
    Vec<S> mu;
};

inline SimultaneousBasis<double> simultaneous_basis_float(const Mat<double>& G, const Mat<double>& K) {
    const int n = G.rows;
    auto Lopt = cholesky(K);
    if (!Lopt) throw std::invalid_argument("bi-invariant form not positive definite");
    Mat<double> L = *Lopt;
    // S = L^-1 G L^-T, standard symmetric problem
    Mat<double> Linv(n, n);
    for (int j = 0; j < n; ++j) {
        Vec<double> e = basis_vec<double>(n, j);
        Vec<double> x(n);
        for (int i = 0; i < n; ++i) {
            double s = e[i];
            for (int k = 0; k < i; ++k) s -= L(i, k) * x[k];
            x[i] = s / L(i, i);
        }
        for (int i = 0; i < n; ++i) Linv(i, j) = x[i];
    }
    Mat<double> Sm = Linv * G * transpose(Linv);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            double avg = 0.5 * (Sm(i, j) + Sm(j, i));
            Sm(i, j) = Sm(j, i) = avg;
        }
    auto [vals, V] = jacobi_eigen(Sm);
    SimultaneousBasis<double> out;
    Mat<double> B = transpose(Linv) * V;  // columns: K-orthonormal eigenvectors
    for (int k = 0; k < n; ++k) {
        Vec<double> v(n);
        for (int i = 0; i < n; ++i) v[i] = B(i, k);
        out.basis.push_back(v);
        out.mu.push_back(vals[k]);
    }
    return out;
}

inline std::optional<Rat> rational_sqrt(const Rat& q) {
    if (q < 0) return std::nullopt;
    mpz_class num = q.get_num(), den = q.get_den(), rn, rd;
    if (!mpz_root(rn.get_mpz_t(), num.get_mpz_t(), 2)) return std::nullopt;
    if (!mpz_root(rd.get_mpz_t(), den.get_mpz_t(), 2)) return std::nullopt;
    return Rat(rn, rd);
}

// Exact path requires K^-1 G diagonal in the reference basis (both forms
// diagonal up to scale) and rational normalizers; otherwise the eigenvectors
// live in extension fields and the caller should fall back to floats.
template <typename S>
SimultaneousBasis<S> simultaneous_basis(const MetricLieAlgebra<S>& m) {
    Mat<S> K = m.algebra.killing_gram();
    S mh = scalar_traits<S>::from_ratio(-1, 2);
    for (auto& v : K.a) v *= mh;
    InnerProduct<S> gate(K);  // positive-definiteness gate for -1/2 B
    const Mat<S>& G = m.metric.gram();
    const int n = m.dim();
    if constexpr (scalar_traits<S>::is_exact) {
        Mat<S> R = inverse(K) * G;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (i != j && R(i, j) != scalar_traits<S>::zero())
                    throw std::domain_error(
                        "exact simultaneous basis requires commuting (diagonal) forms; use the float backend");
        SimultaneousBasis<S> out;
        for (int i = 0; i < n; ++i) {
            auto root = rational_sqrt(K(i, i));
            if (!root)
                throw std::domain_error("bi-invariant norms are irrational; use the float backend");
            Vec<S> v = vec_scale(S(scalar_traits<S>::one() / *root), basis_vec<S>(n, i));
            out.basis.push_back(std::move(v));
            out.mu.push_back(R(i, i));
        }
        return out;
    } else {
        return simultaneous_basis_float(G, K);
    }
}

}  // namespace geovec
