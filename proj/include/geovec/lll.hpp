#pragma once

#include <vector>

#include "geovec/rational.hpp"

namespace geovec {

// Exact LLL lattice reduction (delta = 3/4) over integer basis rows.
// Tiny dimensions only; the Gram-Schmidt bookkeeping runs in mpq.
inline void lll_reduce(std::vector<std::vector<mpz_class>>& basis) {
    const int n = static_cast<int>(basis.size());
    if (n == 0) return;
    const int m = static_cast<int>(basis[0].size());

    std::vector<std::vector<Rat>> mu(n, std::vector<Rat>(n, Rat(0)));
    std::vector<Rat> B(n, Rat(0));  // squared lengths of the GS vectors

    auto recompute = [&]() {
        std::vector<std::vector<Rat>> gs(n, std::vector<Rat>(m, Rat(0)));
        for (int i = 0; i < n; ++i) {
            for (int k = 0; k < m; ++k) gs[i][k] = Rat(basis[i][k]);
            for (int j = 0; j < i; ++j) {
                Rat num(0);
                for (int k = 0; k < m; ++k) num += Rat(basis[i][k]) * gs[j][k];
                mu[i][j] = B[j] == 0 ? Rat(0) : Rat(num / B[j]);
                for (int k = 0; k < m; ++k) gs[i][k] -= mu[i][j] * gs[j][k];
            }
            Rat b(0);
            for (int k = 0; k < m; ++k) b += gs[i][k] * gs[i][k];
            B[i] = b;
        }
    };
    recompute();

    auto size_reduce = [&](int i, int j) {
        Rat half = rat(1, 2);
        if (scalar_traits<Rat>::abs(mu[i][j]) > half) {
            // nearest integer to mu
            mpz_class num = mu[i][j].get_num(), den = mu[i][j].get_den(), q, r;
            mpz_class two_num = 2 * num + den;  // floor((mu + 1/2))
            mpz_fdiv_q(q.get_mpz_t(), two_num.get_mpz_t(), mpz_class(2 * den).get_mpz_t());
            for (int k = 0; k < m; ++k) basis[i][k] -= q * basis[j][k];
            recompute();
        }
    };

    int k = 1;
    int guard = 0;
    while (k < n && ++guard < 100000) {
        size_reduce(k, k - 1);
        Rat lhs = B[k];
        Rat rhs = (rat(3, 4) - mu[k][k - 1] * mu[k][k - 1]) * B[k - 1];
        if (lhs >= rhs) {
            for (int j = k - 2; j >= 0; --j) size_reduce(k, j);
            ++k;
        } else {
            std::swap(basis[k], basis[k - 1]);
            recompute();
            k = std::max(k - 1, 1);
        }
    }
}

}  // namespace geovec
