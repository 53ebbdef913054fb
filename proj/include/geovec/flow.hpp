#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "geovec/catalog.hpp"
#include "geovec/expmat.hpp"
#include "geovec/geodesy.hpp"

namespace geovec {

// Concrete matrix model of a Lie algebra: basis vector E_i -> generator rho_i.
// Bracket compatibility [rho_i, rho_j] = rho([E_i,E_j]) is checked on request.
struct MatrixRealization {
    std::string name;
    int algebra_dim = 0;
    int matrix_dim = 0;
    std::vector<CMat> generators;

    CMat map(const Vec<double>& x) const {
        if (static_cast<int>(x.size()) != algebra_dim)
            throw std::invalid_argument("vector/realization dimension mismatch");
        CMat m(matrix_dim);
        for (int k = 0; k < algebra_dim; ++k)
            for (std::size_t t = 0; t < m.a.size(); ++t) m.a[t] += x[k] * generators[k].a[t];
        return m;
    }

    double bracket_compat_defect(const LieAlgebra<double>& g) const {
        double worst = 0;
        for (int i = 0; i < algebra_dim; ++i)
            for (int j = 0; j < algebra_dim; ++j) {
                CMat lhs = commutator(generators[i], generators[j]);
                CMat rhs = map(g.bracket(basis_vec<double>(algebra_dim, i),
                                         basis_vec<double>(algebra_dim, j)));
                worst = std::max(worst, frob_norm(lhs - rhs));
            }
        return worst;
    }
};

namespace realization {

// su(2) as traceless skew-hermitian 2x2: E_k = -(i/2) sigma_k.
inline MatrixRealization su2_spin_half() {
    MatrixRealization r{"su2-2x2", 3, 2, {}};
    const Cplx I(0, 1);
    CMat e1(2), e2(2), e3(2);
    e1(0, 1) = -I / 2.0; e1(1, 0) = -I / 2.0;
    e2(0, 1) = -0.5;     e2(1, 0) = 0.5;
    e3(0, 0) = -I / 2.0; e3(1, 1) = I / 2.0;
    r.generators = {e1, e2, e3};
    return r;
}

// su(2) ~ so(3) as real rotation generators (spin 1).
inline MatrixRealization su2_so3() {
    MatrixRealization r{"su2-so3", 3, 3, {}};
    CMat e1(3), e2(3), e3(3);
    e1(1, 2) = -1; e1(2, 1) = 1;
    e2(0, 2) = 1;  e2(2, 0) = -1;
    e3(0, 1) = -1; e3(1, 0) = 1;
    r.generators = {e1, e2, e3};
    return r;
}

inline MatrixRealization su2su2_block() {
    auto half = su2_spin_half();
    MatrixRealization r{"su2su2-4x4", 6, 4, {}};
    for (int copy = 0; copy < 2; ++copy)
        for (int k = 0; k < 3; ++k) {
            CMat g(4);
            for (int i = 0; i < 2; ++i)
                for (int j = 0; j < 2; ++j) g(2 * copy + i, 2 * copy + j) = half.generators[k](i, j);
            r.generators.push_back(g);
        }
    return r;
}

// su(3) generators matching catalog::su3's basis order.
inline MatrixRealization su3_fundamental() {
    MatrixRealization r{"su3-3x3", 8, 3, {}};
    auto basis = catalog::su3_basis_matrices();
    for (const auto& b : basis) {
        CMat g(3);
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                g(i, j) = Cplx(to_double(b[i][j].re), to_double(b[i][j].im));
        r.generators.push_back(g);
    }
    return r;
}

// The 2d solvable algebra as upper-triangular (non-skew) real matrices:
// E1 = e11, E2 = e12, giving [E1,E2] = E2.
inline MatrixRealization solvable2_affine() {
    MatrixRealization r{"solv2-2x2", 2, 2, {}};
    CMat e1(2), e2(2);
    e1(0, 0) = 1;
    e2(0, 1) = 1;
    r.generators = {e1, e2};
    return r;
}

inline MatrixRealization for_algebra(const std::string& name) {
    if (name == "su2") return su2_spin_half();
    if (name == "su2+su2") return su2su2_block();
    if (name == "su3") return su3_fundamental();
    if (name == "solv2") return solvable2_affine();
    throw std::invalid_argument("no catalog realization for algebra '" + name + "'");
}

}  // namespace realization

// Body-velocity equation of the geodesic flow: V' = xi(V). Geodesic vectors
// are exactly the stationary points.
inline Vec<double> euler_arnold_rhs(const MetricLieAlgebra<double>& m, const Vec<double>& V) {
    return xi(m, V);
}

struct Trajectory {
    Vec<double> times;
    std::vector<Vec<double>> velocities;   // body velocity V(t)
    std::vector<CMat> elements;            // group element g(t)
    double energy_drift = 0;               // max |(V,V) - (V0,V0)| over the run
    double max_unitarity_defect = 0;
};

// Classical RK4 on V' = xi(V) coupled with per-step exponential reconstruction
// g_{k+1} = g_k exp(h rho(V_mid)), V_mid = (V_k + V_{k+1})/2. The exponential
// update keeps g on the group without projection.
inline Trajectory integrate(const MetricLieAlgebra<double>& m, const MatrixRealization& rho,
                            Vec<double> V0, double T, double h) {
    if (h <= 0 || T <= 0) throw std::invalid_argument("step and horizon must be positive");
    const int steps = static_cast<int>(T / h + 0.5);
    Trajectory out;
    out.times.reserve(steps + 1);
    out.velocities.reserve(steps + 1);
    out.elements.reserve(steps + 1);
    CMat g = CMat::identity(rho.matrix_dim);
    Vec<double> V = std::move(V0);
    double E0 = m.metric.ip(V, V);
    out.times.push_back(0);
    out.velocities.push_back(V);
    out.elements.push_back(g);
    auto f = [&](const Vec<double>& v) { return xi(m, v); };
    for (int k = 0; k < steps; ++k) {
        Vec<double> k1 = f(V);
        Vec<double> k2 = f(vec_add(V, vec_scale(h / 2, k1)));
        Vec<double> k3 = f(vec_add(V, vec_scale(h / 2, k2)));
        Vec<double> k4 = f(vec_add(V, vec_scale(h, k3)));
        Vec<double> Vn = V;
        for (std::size_t i = 0; i < V.size(); ++i)
            Vn[i] += h / 6.0 * (k1[i] + 2 * k2[i] + 2 * k3[i] + k4[i]);
        Vec<double> Vmid = vec_scale(0.5, vec_add(V, Vn));
        CMat stepm = rho.map(vec_scale(h, Vmid));
        g = g * expm(stepm);
        V = std::move(Vn);
        out.times.push_back((k + 1) * h);
        out.velocities.push_back(V);
        out.elements.push_back(g);
        out.energy_drift = std::max(out.energy_drift, std::fabs(m.metric.ip(V, V) - E0));
        out.max_unitarity_defect = std::max(out.max_unitarity_defect, unitarity_defect(g));
    }
    return out;
}

// Samples the one-parameter orbit exp(t rho(X)) on a uniform grid.
inline Trajectory one_parameter_orbit(const MatrixRealization& rho, const Vec<double>& X,
                                      double T, double h) {
    if (h <= 0 || T <= 0) throw std::invalid_argument("step and horizon must be positive");
    const int steps = static_cast<int>(T / h + 0.5);
    Trajectory out;
    CMat gen = rho.map(X);
    CMat stepm = expm(Cplx(h, 0) * gen);
    CMat g = CMat::identity(rho.matrix_dim);
    for (int k = 0; k <= steps; ++k) {
        out.times.push_back(k * h);
        out.velocities.push_back(X);
        out.elements.push_back(g);
        out.max_unitarity_defect = std::max(out.max_unitarity_defect, unitarity_defect(g));
        g = g * stepm;
    }
    return out;
}

}  // namespace geovec
