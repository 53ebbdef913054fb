#pragma once

#include <cmath>
#include <cstdint>

#include "geovec/linalg.hpp"
#include "geovec/rational.hpp"

namespace geovec {

// Deterministic splitmix64 generator: identical streams on every platform,
// which keeps seeded runs byte-reproducible.
class SeededRng {
public:
    explicit SeededRng(std::uint64_t seed) : state_(seed + 0x9e3779b97f4a7c15ULL) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // uniform in [0, 1)
    double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    // uniform integer in [lo, hi]
    long next_int(long lo, long hi) {
        return lo + static_cast<long>(next_u64() % static_cast<std::uint64_t>(hi - lo + 1));
    }

private:
    std::uint64_t state_;
};

// Random rational with numerator and denominator bounded by 100 (documented
// sampling convention; keeps exact computations small and reproducible).
inline Rat random_rat(SeededRng& rng, long bound = 100) {
    long num = rng.next_int(-bound, bound);
    long den = rng.next_int(1, bound);
    return rat(num, den);
}

inline Rat random_positive_rat(SeededRng& rng, long bound = 100) {
    long num = rng.next_int(1, bound);
    long den = rng.next_int(1, bound);
    return rat(num, den);
}

template <typename S>
S random_scalar(SeededRng& rng) {
    if constexpr (scalar_traits<S>::is_exact) {
        return random_rat(rng);
    } else {
        return 2.0 * rng.next_double() - 1.0;
    }
}

template <typename S>
Vec<S> random_vec(SeededRng& rng, int n) {
    Vec<S> v(n);
    for (auto& x : v) x = random_scalar<S>(rng);
    return v;
}

inline Vec<double> random_unit_vec(SeededRng& rng, int n) {
    // Box-Muller into a uniform direction
    Vec<double> v(n);
    for (int i = 0; i < n; ++i) {
        double u1 = rng.next_double(), u2 = rng.next_double();
        u1 = u1 <= 0 ? 1e-12 : u1;
        v[i] = std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586 * u2);
    }
    double nv = norm2(v);
    if (nv < 1e-12) return random_unit_vec(rng, n);
    for (auto& x : v) x /= nv;
    return v;
}

}  // namespace geovec
