// Acceptance suite: ten numbered criteria, one pass/fail line each, selectable
// with --criterion N. Exit code 0 iff every selected criterion passes.
//
// Criteria 1 and 2 assert reference closed forms for the su(2) diagonal
// family and the su(2)+su(2) frame family verbatim. Neither closed form is
// realizable by a positive-definite inner product on the stated bracket
// tables (criterion 1's form forces an indefinite gram matrix; criterion 2's
// three families admit only block-scalar metrics, whose zero set is all of
// the algebra). The criteria run faithfully and report the failures,
// followed by supplementary lines showing what the implemented metrics do
// satisfy exactly.

#include <chrono>
#include <cstdio>
#include <cstring>
#include <functional>
#include <string>
#include <vector>

#include "geovec/catalog.hpp"
#include "geovec/charpoly.hpp"
#include "geovec/closure.hpp"
#include "geovec/connection.hpp"
#include "geovec/flow.hpp"
#include "geovec/geodesy.hpp"
#include "geovec/homspace.hpp"
#include "geovec/rng.hpp"

#include "frame_metric_zeros.hpp"

using namespace geovec;
using namespace geovec::catalog;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;

    void fail(const std::string& why) {
        pass = false;
        if (!detail.empty()) detail += "; ";
        detail += why;
    }
    void note(const std::string& line) {
        if (!detail.empty()) detail += "; ";
        detail += line;
    }
};

MetricLieAlgebra<Rat> standard_metric(const LieAlgebra<Rat>& g) {
    return {g, InnerProduct<Rat>(Mat<Rat>::identity(g.dim()))};
}

// the three reference zero-set families claimed for the frame metric
std::vector<AffineFamily<Rat>> reference_families(const Rat& d) {
    auto v = [](std::initializer_list<Rat> l) { return Vec<Rat>(l); };
    std::vector<AffineFamily<Rat>> fams;
    fams.push_back({"f1", zero_vec<Rat>(6),
                    {v({Rat(1), Rat(0), Rat(0), Rat(0), Rat(0), d}), basis_vec<Rat>(6, 3),
                     basis_vec<Rat>(6, 4)}});
    fams.push_back({"f2", zero_vec<Rat>(6),
                    {v({Rat(1), Rat(0), Rat(0), Rat(0), Rat(2), d}),
                     v({Rat(0), Rat(1), Rat(0), Rat(0), Rat(0), Rat(1)}),
                     v({Rat(0), Rat(0), Rat(1), Rat(0), Rat(0), Rat(1)}),
                     v({Rat(0), Rat(0), Rat(0), Rat(1), Rat(-1), Rat(0)})}});
    fams.push_back({"f3", zero_vec<Rat>(6),
                    {v({d, Rat(1), Rat(1), d, d, Rat(0)}), basis_vec<Rat>(6, 5)}});
    return fams;
}

// ---------------------------------------------------------------------------
// criterion 1: diagonal su(2) closed form, exact, 100 seeded samples
Outcome criterion1() {
    Outcome out;
    SeededRng rng(1001);
    int literal_matches = 0, sign_corrected_matches = 0;
    std::string first_mismatch;
    for (int t = 0; t < 100; ++t) {
        Rat a = random_positive_rat(rng), b = random_positive_rat(rng), c = random_positive_rat(rng);
        Vec<Rat> x = random_vec<Rat>(rng, 3);
        Vec<Rat> formula = {Rat(a * (b - c) / (b * c)) * x[1] * x[2],
                            Rat(b * (c - a) / (a * c)) * x[0] * x[2],
                            Rat(c * (a - b) / (a * b)) * x[0] * x[1]};
        // literal claim: the frame metric of {aE1, bE2, cE3} yields the formula
        auto m = diagonal_su2(a, b, c);
        if (xi(m, x) == formula) ++literal_matches;
        else if (first_mismatch.empty()) {
            auto got = xi(m, x);
            first_mismatch = "first mismatch at (a,b,c)=(" + to_string(a) + "," + to_string(b) +
                             "," + to_string(c) + "): xi_1 = " + to_string(got[0]) +
                             " vs formula " + to_string(formula[0]);
        }
        // supplementary: gram diag(1/a,1/b,1/c) satisfies the NEGATED formula
        auto m2 = su2_gram_diag(Rat(1 / a), Rat(1 / b), Rat(1 / c));
        if (xi(m2, x) == vec_scale(Rat(-1), formula)) ++sign_corrected_matches;
    }
    if (literal_matches != 100) {
        out.fail("closed form reproduced on " + std::to_string(literal_matches) +
                 "/100 samples; " + first_mismatch);
        out.note("supplementary: gram diag(1/a,1/b,1/c) gives exactly the NEGATED form on " +
                 std::to_string(sign_corrected_matches) + "/100 (global sign defect in the reference formula)");
    }
    return out;
}

// criterion 2: frame-family zero set, reference families, d in {2, 3, 5/7}
Outcome criterion2() {
    Outcome out;
    for (const Rat& d : {Rat(2), Rat(3), rat(5, 7)}) {
        auto m = su2su2_metric(d);
        auto fams = reference_families(d);
        for (const auto& fam : fams) {
            if (!verify_family(m, fam, 50, 2002)) {
                out.fail("family " + fam.name + " not in the zero set at d = " + to_string(d));
                break;
            }
        }
        // Newton solve and clustering against the reference families
        std::vector<AffineFamily<double>> famf;
        for (const auto& f : fams) {
            AffineFamily<double> g{f.name, to_float(f.base), {}};
            for (const auto& dir : f.directions) g.directions.push_back(to_float(dir));
            famf.push_back(g);
        }
        auto rep = zero_set_solve(m.to_float(), 500, 2002, 1e-12, famf);
        int hits[3] = {0, 0, 0};
        int stray = 0;
        for (const auto& z : rep.zeros) {
            if (z.family >= 0) ++hits[z.family];
            else ++stray;
        }
        if (stray > 0)
            out.fail(std::to_string(stray) + " zeros off the reference families at d = " +
                     to_string(d) + " (" + std::to_string(rep.converged) + "/500 converged)");
        for (int f = 0; f < 3; ++f)
            if (hits[f] == 0) out.fail("family f" + std::to_string(f + 1) + " never hit at d = " + to_string(d));
    }
    if (!out.pass) {
        // supplementary: the zero set this metric actually has (verified
        // exactly: five linear components plus a rational quadric sheet)
        bool all_true_ok = true;
        for (const Rat& d : {Rat(2), Rat(3), rat(5, 7)}) {
            auto m = su2su2_metric(d);
            for (const auto& fam : frame_zeros::linear_components(d))
                if (!verify_family(m, fam, 50, 2002)) all_true_ok = false;
            SeededRng rng(2003);
            for (int t = 0; t < 25; ++t) {
                auto q = frame_zeros::quadric_point(d, random_rat(rng), random_rat(rng));
                if (q && !is_geodesic_vector(m, *q)) all_true_ok = false;
            }
        }
        out.note(std::string("supplementary: the derived components (3d first copy, three 2d planes, "
                             "1d frame axis, quadric sheet) verify exactly on 50+25 samples per d: ") +
                 (all_true_ok ? "yes" : "NO"));
    }
    return out;
}

// criterion 3: exact Ricci discriminant asymptotics of the frame family
Outcome criterion3() {
    Outcome out;
    const Rat target = Rat(mpz_class(3)) * 0;  // placeholder, set below
    Rat c = Rat(1);
    for (int i = 0; i < 18; ++i) c *= 3;
    c *= 17 * 17;
    c /= 256;  // 3^18 17^2 / 2^8
    std::vector<Rat> ds = {rat(1, 100), rat(1, 1000), rat(1, 10000)};
    std::vector<Rat> scaled;
    std::vector<double> logs;
    for (const auto& d : ds) {
        auto m = su2su2_metric(d);
        ConnectionTable<Rat> conn(m);
        Rat D = charpoly_discriminant(conn.ricci_operator());
        if (D == 0) {
            out.fail("discriminant vanished at d = " + to_string(d));
            return out;
        }
        Rat s = D;
        for (int i = 0; i < 44; ++i) s *= d;
        scaled.push_back(s);
        logs.push_back(std::log(std::fabs(to_double(D))));
    }
    for (std::size_t i = 0; i + 1 < ds.size(); ++i) {
        double slope = (logs[i + 1] - logs[i]) /
                       (std::log(to_double(ds[i + 1])) - std::log(to_double(ds[i])));
        if (std::fabs(slope + 44.0) > 0.01)
            out.fail("log-log slope " + std::to_string(slope) + " outside -44 +- 0.01");
    }
    Rat dev3 = scalar_traits<Rat>::abs(Rat((scaled[1] - c) / c));
    Rat dev4 = scalar_traits<Rat>::abs(Rat((scaled[2] - c) / c));
    if (!(dev4 < rat(1, 100))) out.fail("relative deviation at d=1e-4 not below 1%");
    if (!(dev4 < dev3)) out.fail("deviation does not shrink from d=1e-3 to d=1e-4");
    char buf[128];
    std::snprintf(buf, sizeof buf, "D*d^44 -> %.9g (target %.9g), reldev %.3g -> %.3g",
                  to_double(scaled[2]), to_double(c), to_double(dev3), to_double(dev4));
    out.note(buf);
    return out;
}

// criterion 4: delta identities across the catalog
Outcome criterion4() {
    Outcome out;
    std::vector<std::pair<std::string, MetricLieAlgebra<Rat>>> pairs;
    pairs.emplace_back("abelian3", standard_metric(abelian(3)));
    pairs.emplace_back("heis3", standard_metric(heisenberg3()));
    pairs.emplace_back("solv2", standard_metric(solvable2()));
    pairs.emplace_back("su2 diag(1,2,3)", diagonal_su2(Rat(1), Rat(2), Rat(3)));
    pairs.emplace_back("su2su2 d=2", su2su2_metric(Rat(2)));
    pairs.emplace_back("su2su2 d=5/7", su2su2_metric(rat(5, 7)));
    pairs.emplace_back("su3", standard_metric(su3()));
    for (const auto& [name, m] : pairs) {
        if (delta_from_xi(m) != delta(m)) out.fail("delta mismatch on " + name);
        if (is_unimodular(m.algebra) && !is_zero_vec(delta(m)))
            out.fail("nonzero delta on unimodular " + name);
    }
    SeededRng rng(4004);
    for (const auto& g : {abelian(3), heisenberg3(), solvable2(), su2(), su2su2(), su3()}) {
        for (int t = 0; t < 20; ++t) {
            Mat<Rat> A(g.dim(), g.dim());
            for (int i = 0; i < g.dim(); ++i) {
                A(i, i) = random_positive_rat(rng, 8);
                for (int j = 0; j < i; ++j) A(i, j) = random_rat(rng, 8);
            }
            MetricLieAlgebra<Rat> m(g, from_lower_triangular(A));
            if (delta_from_xi(m) != delta(m)) {
                out.fail("delta mismatch on a random metric over " + g.name());
                break;
            }
        }
    }
    if (delta(standard_metric(solvable2())) != Vec<Rat>{Rat(1), Rat(0)})
        out.fail("delta on solv2 is not E1");
    return out;
}

// criterion 5: connection and curvature oracle suite, exact
Outcome criterion5() {
    Outcome out;
    std::vector<std::pair<std::string, MetricLieAlgebra<Rat>>> pairs;
    pairs.emplace_back("abelian3", standard_metric(abelian(3)));
    pairs.emplace_back("heis3", standard_metric(heisenberg3()));
    pairs.emplace_back("solv2", standard_metric(solvable2()));
    pairs.emplace_back("su2 diag(1,2,3)", diagonal_su2(Rat(1), Rat(2), Rat(3)));
    pairs.emplace_back("su2 bi-invariant", diagonal_su2(Rat(1), Rat(1), Rat(1)));
    pairs.emplace_back("su2su2 d=2", su2su2_metric(Rat(2)));
    SeededRng rng(5005);
    for (const auto& [name, m] : pairs) {
        ConnectionTable<Rat> conn(m);
        const int n = m.dim();
        for (int t = 0; t < 5; ++t) {
            auto X = random_vec<Rat>(rng, n), Y = random_vec<Rat>(rng, n),
                 Z = random_vec<Rat>(rng, n), W = random_vec<Rat>(rng, n);
            if (vec_sub(conn.nabla(X, Y), conn.nabla(Y, X)) != m.algebra.bracket(X, Y))
                out.fail("torsion on " + name);
            if (m.metric.ip(conn.nabla(X, Y), Z) + m.metric.ip(Y, conn.nabla(X, Z)) != 0)
                out.fail("metric compatibility on " + name);
            auto bianchi = vec_add(vec_add(conn.riemann(X, Y, Z), conn.riemann(Y, Z, X)),
                                   conn.riemann(Z, X, Y));
            if (!is_zero_vec(bianchi)) out.fail("bianchi on " + name);
            if (m.metric.ip(conn.riemann(X, Y, Z), W) != m.metric.ip(conn.riemann(Z, W, X), Y))
                out.fail("pair symmetry on " + name);
            if (conn.nabla(X, X) != vec_scale(Rat(-1), xi(m, X)))
                out.fail("nabla_X X != -xi(X) on " + name);
            if (!out.pass) break;
        }
    }
    {
        auto m = standard_metric(solvable2());
        ConnectionTable<Rat> conn(m);
        if (conn.sectional(basis_vec<Rat>(2, 0), basis_vec<Rat>(2, 1)) != Rat(-1))
            out.fail("hyperbolic plane curvature is not -1");
    }
    {
        auto bi = diagonal_su2(Rat(1), Rat(1), Rat(1));
        ConnectionTable<Rat> conn(bi);
        if (conn.sectional(basis_vec<Rat>(3, 0), basis_vec<Rat>(3, 1)) != rat(1, 4))
            out.fail("bi-invariant K != 1/4");
        Mat<Rat> half = Mat<Rat>::identity(3);
        for (auto& v : half.a) v *= rat(1, 2);
        if (conn.ricci_operator() != half) out.fail("bi-invariant Ricci != Id/2");
    }
    return out;
}

// criterion 6: totally-geodesic dichotomy for the cartan torus
Outcome criterion6() {
    Outcome out;
    auto g = su2su2();
    Subalgebra<Rat> torus{{basis_vec<Rat>(6, 0), basis_vec<Rat>(6, 3)}};
    {
        MetricLieAlgebra<Rat> m(g, minus_half_killing(g));
        ConnectionTable<Rat> conn(m);
        if (!is_totally_geodesic(conn, torus)) out.fail("bi-invariant torus is not totally geodesic");
    }
    {
        Vec<Rat> V = {Rat(2), Rat(1), Rat(0), Rat(-1), Rat(0), Rat(0)};
        MetricLieAlgebra<Rat> m(g, rank_one_perturbation(minus_half_killing(g), V, Rat(1)));
        ConnectionTable<Rat> conn(m);
        if (is_totally_geodesic(conn, torus)) out.fail("perturbed torus reported totally geodesic");
        auto mf = m.to_float();
        ConnectionTable<double> cf(mf);
        Subalgebra<double> tf{{basis_vec<double>(6, 0), basis_vec<double>(6, 3)}};
        double worst = 0;
        for (int i = 0; i < 2; ++i)
            for (int j = i; j < 2; ++j)
                worst = std::max(worst, norm2(second_fundamental_form(cf, tf, tf.span[i], tf.span[j])));
        if (!(worst > 1e-6)) out.fail("float second fundamental form below 1e-6");
    }
    return out;
}

// criterion 7: curvature sign on the cartan plane of the frame metric, d = 2
Outcome criterion7() {
    Outcome out;
    auto m = su2su2_metric(Rat(2));
    ConnectionTable<Rat> conn(m);
    Vec<Rat> X = {Rat(1), Rat(0), Rat(0), Rat(0), Rat(0), Rat(2)};  // family-1 direction in t
    SeededRng rng(7007);
    int checked = 0;
    while (checked < 20) {
        Vec<Rat> Y = zero_vec<Rat>(6);
        Y[0] = random_rat(rng);
        Y[5] = random_rat(rng);
        if (!linearly_independent(std::vector<Vec<Rat>>{X, Y})) continue;
        Rat K = conn.sectional(X, Y);
        if (to_double(K) < -1e-12) {
            out.fail("negative sectional curvature " + to_string(K));
            break;
        }
        ++checked;
    }
    return out;
}

// criterion 8: flow suite
Outcome criterion8() {
    Outcome out;
    auto rho2 = realization::su2_spin_half();
    {
        auto m = diagonal_su2(Rat(1), Rat(2), Rat(3)).to_float();
        auto traj = integrate(m, rho2, {1, 1, 0}, 1.0, 1e-3);
        if (!(traj.energy_drift < 1e-9)) out.fail("energy drift on su2 diag(1,2,3)");
        if (!(traj.max_unitarity_defect < 1e-9)) out.fail("unitarity defect on su2 diag(1,2,3)");
        auto P0 = mat_vec(m.metric.gram(), Vec<double>{1, 1, 0});
        double c0 = dot(P0, P0), cd = 0;
        for (const auto& v : traj.velocities) {
            auto P = mat_vec(m.metric.gram(), v);
            cd = std::max(cd, std::fabs(dot(P, P) - c0));
        }
        if (!(cd < 1e-9)) out.fail("euler-top casimir drift " + std::to_string(cd));
    }
    {
        auto m = su2su2_metric(Rat(2)).to_float();
        auto rho = realization::su2su2_block();
        auto traj = integrate(m, rho, {0.4, -0.3, 0.7, 0.2, 0.1, -0.5}, 1.0, 1e-3);
        if (!(traj.energy_drift < 1e-9)) out.fail("energy drift on the frame metric");
        if (!(traj.max_unitarity_defect < 1e-9)) out.fail("unitarity defect on the frame metric");
    }
    {
        auto m = diagonal_su2(Rat(1), Rat(1), Rat(2)).to_float();
        auto drift = integrate(m, rho2, {1, 0, 1}, 1.0, 1e-3);
        if (!(drift.energy_drift < 1e-9)) out.fail("energy drift on the berger metric");
        auto traj = integrate(m, rho2, {1, 0, 0}, 10.0, 1e-3);
        auto orbit = one_parameter_orbit(rho2, {1, 0, 0}, 10.0, 1e-3);
        double worst = 0;
        for (std::size_t k = 0; k < traj.elements.size(); k += 25)
            worst = std::max(worst, frob_norm(traj.elements[k] - orbit.elements[k]));
        if (!(worst < 1e-8)) out.fail("geodesic trajectory misses exp(tX) by " + std::to_string(worst));
    }
    return out;
}

// criterion 9: closure suite
Outcome criterion9() {
    Outcome out;
    auto rho = realization::su2su2_block();
    SeededRng rng(9009);
    for (int t = 0; t < 10; ++t) {
        Rat p = Rat(rng.next_int(1, 100));
        Rat q = Rat(rng.next_int(1, 100));
        Rat ratio = Rat(p / q);
        // exact route: frequencies (1/2, ratio/2) by the block spectrum
        auto repx = classify_closure_exact({rat(1, 2), Rat(ratio / 2)});
        if (repx.kind != OrbitKind::circle) {
            out.fail("exact classification of a rational ratio is not a circle");
            break;
        }
        // float route agrees
        Vec<double> X = {1, 0, 0, to_double(ratio), 0, 0};
        auto rep = classify_closure(rho, X, 1000000, 1e-9);
        if (rep.kind != OrbitKind::circle) {
            out.fail("float classification of ratio " + to_string(ratio) + " is not a circle");
            break;
        }
    }
    Vec<double> X = {1, 0, 0, std::sqrt(2.0), 0, 0};
    auto rep = classify_closure(rho, X, 1000000, 1e-9);
    if (rep.kind != OrbitKind::torus || rep.torus_dim != 2)
        out.fail("sqrt(2) direction not classified as a 2-torus");
    if (!rep.relations.empty()) out.fail("spurious integer relation below 1e6");
    auto dense = density_check(rho, X, rep, 1e4, 0.05, 100);
    if (!(dense.covering_defect < 0.05))
        out.fail("covering defect " + std::to_string(dense.covering_defect) + " at T=1e4");
    return out;
}

// criterion 10: GO criterion suite
Outcome criterion10() {
    Outcome out;
    {
        auto rs = catalog_spaces::symmetric_pair_su2su2();
        SeededRng rng(1010);
        for (int t = 0; t < 100; ++t) {
            Vec<Rat> X = zero_vec<Rat>(6);
            for (int i = 0; i < 3; ++i)
                X = vec_add(X, vec_scale(random_rat(rng), rs.m_basis()[i]));
            auto sol = go_solve(rs, X);
            if (sol.residual != 0 || !is_zero_vec(sol.Z)) {
                out.fail("symmetric pair direction with nonzero residual or Z");
                break;
            }
        }
    }
    {
        auto m = diagonal_su2(Rat(1), Rat(2), Rat(3));
        auto rs = lie_group_as_reductive(m);
        SeededRng rng(1011);
        for (int t = 0; t < 100; ++t) {
            auto X = random_vec<Rat>(rng, 3);
            bool go = go_solve(rs, X).residual == 0;
            if (go != is_geodesic_vector(m, X)) {
                out.fail("h = 0 reduction disagrees with the geodesic-vector test");
                break;
            }
        }
        auto sol = go_solve(rs, Vec<Rat>{Rat(1), Rat(1), Rat(1)});
        if (!(to_double(sol.residual) > 1e-3))
            out.fail("generic direction residual not above 1e-3");
    }
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    int only = 0;
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--criterion") == 0 && i + 1 < argc) only = std::atoi(argv[i + 1]);
    }
    struct Entry {
        int id;
        const char* name;
        double budget_s;
        std::function<Outcome()> run;
    };
    std::vector<Entry> entries = {
        {1, "diagonal su(2) closed form (exact, 100 samples)", 1.0, criterion1},
        {2, "frame-family zero set (d = 2, 3, 5/7)", 30.0, criterion2},
        {3, "Ricci discriminant asymptotics (exact)", 120.0, criterion3},
        {4, "delta identities across the catalog", 5.0, criterion4},
        {5, "connection/curvature oracle suite", 5.0, criterion5},
        {6, "totally-geodesic dichotomy", 1.0, criterion6},
        {7, "curvature sign on the cartan plane", 1.0, criterion7},
        {8, "flow suite", 30.0, criterion8},
        {9, "closure suite", 60.0, criterion9},
        {10, "GO criterion suite", 5.0, criterion10},
    };
    bool all_pass = true;
    for (const auto& e : entries) {
        if (only != 0 && e.id != only) continue;
        auto t0 = std::chrono::steady_clock::now();
        Outcome out = e.run();
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (secs > e.budget_s) out.fail("runtime " + std::to_string(secs) + "s over budget");
        std::printf("[%s] criterion %d: %s (%.2fs)%s%s\n", out.pass ? "PASS" : "FAIL", e.id,
                    e.name, secs, out.detail.empty() ? "" : " -- ", out.detail.c_str());
        all_pass = all_pass && out.pass;
    }
    return all_pass ? 0 : 1;
}
