#pragma once

// Zero-set components of the su(2)+su(2) lower-triangular frame metric,
// derived by case analysis of the six geodesic-vector conditions and
// verified exactly by the suites that include this header.
//
// Linear components (kappa = (3 - d^2) / (2d)):
//   A: the first copy                    (v4 = v5 = v6 = 0)            3-dim
//   B: (0, t, -t, s, -s, 0)                                             2-dim
//   C: (0, k u, k u, -s-u, s, u)                                        2-dim
//   D: (s+t, 0, 0, s, t, 0)                                             2-dim
//   E: span{(1, 1/d, 1/d, 0, 0, 1)}     (the last frame vector)         1-dim
// plus one non-linear quadric sheet with v2 = v3 and v4 = v5, rationally
// parametrized by (s, u) through a 2x2 linear solve (see quadric_point).

#include <optional>
#include <vector>

#include "geovec/geodesy.hpp"
#include "geovec/linalg.hpp"

namespace frame_zeros {

using geovec::AffineFamily;
using geovec::Mat;
using geovec::Rat;
using geovec::Vec;

inline std::vector<AffineFamily<Rat>> linear_components(const Rat& d) {
    Rat kappa = (Rat(3) - d * d) / (Rat(2) * d);
    auto v = [](std::initializer_list<Rat> l) { return Vec<Rat>(l); };
    std::vector<AffineFamily<Rat>> fams;
    fams.push_back({"first-copy", geovec::zero_vec<Rat>(6),
                    {geovec::basis_vec<Rat>(6, 0), geovec::basis_vec<Rat>(6, 1),
                     geovec::basis_vec<Rat>(6, 2)}});
    fams.push_back({"antidiag-pairs", geovec::zero_vec<Rat>(6),
                    {v({Rat(0), Rat(1), Rat(-1), Rat(0), Rat(0), Rat(0)}),
                     v({Rat(0), Rat(0), Rat(0), Rat(1), Rat(-1), Rat(0)})}});
    fams.push_back({"kappa-plane", geovec::zero_vec<Rat>(6),
                    {v({Rat(0), kappa, kappa, Rat(-1), Rat(0), Rat(1)}),
                     v({Rat(0), Rat(0), Rat(0), Rat(-1), Rat(1), Rat(0)})}});
    fams.push_back({"sum-plane", geovec::zero_vec<Rat>(6),
                    {v({Rat(1), Rat(0), Rat(0), Rat(1), Rat(0), Rat(0)}),
                     v({Rat(1), Rat(0), Rat(0), Rat(0), Rat(1), Rat(0)})}});
    fams.push_back({"frame-axis", geovec::zero_vec<Rat>(6),
                    {v({Rat(1), Rat(1) / d, Rat(1) / d, Rat(0), Rat(0), Rat(1)})}});
    return fams;
}

// Point of the quadric sheet at parameters (s, u): coordinates
// (v1, c, c, s, s, u) where (c, v1) solve
//   (2s + u) c - (u/d) v1                 = 0
//   (2s/d)  c + (s - u) v1                = 2s^2 - 2su - u^2 + 3su/d^2.
// Returns nullopt when the parameter pair is singular for the solve.
inline std::optional<Vec<Rat>> quadric_point(const Rat& d, const Rat& s, const Rat& u) {
    Mat<Rat> M(2, 2);
    M(0, 0) = Rat(2) * s + u;
    M(0, 1) = -u / d;
    M(1, 0) = Rat(2) * s / d;
    M(1, 1) = s - u;
    Vec<Rat> rhs = {Rat(0),
                    Rat(2) * s * s - Rat(2) * s * u - u * u + Rat(3) * s * u / (d * d)};
    if (geovec::det(M) == 0) return std::nullopt;
    auto cv = geovec::solve(M, rhs);
    return Vec<Rat>{cv[1], cv[0], cv[0], s, s, u};
}

}  // namespace frame_zeros
