#pragma once

#include <gmpxx.h>

#include <cmath>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace geovec {

// Exact scalar backend: arbitrary-precision rational, always kept canonical
// (gcd-reduced, sign carried by the numerator).
using Rat = mpq_class;

inline Rat rat(long num, long den = 1) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    Rat q(num, den);
    q.canonicalize();
    return q;
}

inline double to_double(const Rat& q) { return q.get_d(); }
inline double to_double(double x) { return x; }

// Accepts "p/q", integer, or plain decimal literals ("-3", "1/3", "0.25").
inline std::optional<Rat> parse_rat(std::string_view text) {
    std::string s(text);
    if (s.empty()) return std::nullopt;
    auto slash = s.find('/');
    try {
        // base 10 explicitly: the mpz string constructor would otherwise
        // treat a leading zero as octal
        if (slash != std::string::npos) {
            mpz_class num(s.substr(0, slash), 10);
            mpz_class den(s.substr(slash + 1), 10);
            if (den == 0) return std::nullopt;
            Rat q(num, den);
            q.canonicalize();
            return q;
        }
        auto dot = s.find('.');
        if (dot == std::string::npos) {
            return Rat(mpz_class(s, 10));
        }
        std::string digits = s.substr(0, dot) + s.substr(dot + 1);
        std::size_t frac_len = s.size() - dot - 1;
        if (digits.empty() || digits == "-" || digits == "+") return std::nullopt;
        mpz_class num(digits, 10);
        mpz_class den;
        mpz_ui_pow_ui(den.get_mpz_t(), 10, frac_len);
        Rat q(num, den);
        q.canonicalize();
        return q;
    } catch (const std::invalid_argument&) {
        return std::nullopt;
    }
}

inline std::string to_string(const Rat& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

// Scalar backend traits. Everything algorithmic is generic over S via these.
template <typename S>
struct scalar_traits;

template <>
struct scalar_traits<Rat> {
    static constexpr bool is_exact = true;
    static Rat zero() { return Rat(0); }
    static Rat one() { return Rat(1); }
    static Rat from_int(long v) { return Rat(v); }
    static Rat from_ratio(long num, long den) { return rat(num, den); }
    static Rat abs(const Rat& x) { return x < 0 ? Rat(-x) : x; }
    // Exact backend ignores tolerances: zero means zero.
    static bool is_zero(const Rat& x, const Rat& /*tol*/ = Rat(0)) { return x == 0; }
};

template <>
struct scalar_traits<double> {
    static constexpr bool is_exact = false;
    static double zero() { return 0.0; }
    static double one() { return 1.0; }
    static double from_int(long v) { return static_cast<double>(v); }
    static double from_ratio(long num, long den) {
        return static_cast<double>(num) / static_cast<double>(den);
    }
    static double abs(double x) { return std::fabs(x); }
    static bool is_zero(double x, double tol = 1e-10) { return std::fabs(x) <= tol; }
};

}  // namespace geovec
