#include "doctest.h"

#include "geovec/closure.hpp"
#include "geovec/rng.hpp"

using namespace geovec;

TEST_CASE("frequencies of catalog realizations") {
    auto su2 = realization::su2_spin_half();
    auto th = frequencies(su2, {1, 0, 0});
    REQUIRE(th.size() == 1);
    CHECK(th[0] == doctest::Approx(0.5).epsilon(1e-12));

    auto g2 = realization::su2su2_block();
    auto th2 = frequencies(g2, {1, 0, 0, 0.6, 0, 0});
    REQUIRE(th2.size() == 2);
    CHECK(th2[0] == doctest::Approx(0.3).epsilon(1e-10));
    CHECK(th2[1] == doctest::Approx(0.5).epsilon(1e-10));

    CHECK(frequencies(g2, zero_vec<double>(6)).empty());

    auto solv = realization::solvable2_affine();
    CHECK_THROWS_AS((void)frequencies(solv, {1.0, 0.5}), std::domain_error);
}

TEST_CASE("q_rank on rational ratios") {
    auto qr = q_rank({1.0, 0.5});
    CHECK(qr.rank == 1);
    REQUIRE(!qr.relations.empty());
    // every reported relation annihilates the frequencies
    for (const auto& r : qr.relations) CHECK(std::fabs(r[0] * 1.0 + r[1] * 0.5) < 1e-9);
}

TEST_CASE("q_rank on sqrt(2)") {
    const double s2 = std::sqrt(2.0);
    auto qr = q_rank({1.0, s2}, 1000000);
    CHECK(qr.rank == 2);
    CHECK(qr.relations.empty());

    auto qr3 = q_rank({1.0, s2, 1.0 + s2}, 1000000);
    CHECK(qr3.rank == 2);
    bool found = false;
    for (const auto& r : qr3.relations) {
        CHECK(std::fabs(r[0] + r[1] * s2 + r[2] * (1 + s2)) < 1e-6);
        // the primitive relation (1,1,-1) up to sign
        if ((r[0] == 1 && r[1] == 1 && r[2] == -1) || (r[0] == -1 && r[1] == -1 && r[2] == 1))
            found = true;
    }
    CHECK(found);
}

TEST_CASE("rank monotonicity: adding a frequency never lowers the rank") {
    const double s2 = std::sqrt(2.0), s3 = std::sqrt(3.0);
    Vec<double> base = {1.0};
    int prev = q_rank(base).rank;
    for (double add : {s2, 0.5, s3, 1.0 + s2}) {
        base.push_back(add);
        int r = q_rank(base).rank;
        CHECK(r >= prev);
        prev = r;
    }
}

TEST_CASE("q_rank_exact on rational lists") {
    auto qr = q_rank_exact({rat(1, 2), rat(3, 4)});
    CHECK(qr.rank == 1);
    REQUIRE(qr.relations.size() == 1);
    // 3/4 * 2 - 1/2 * 3 = 0: relation (3, -2) up to sign
    const auto& r = qr.relations[0];
    CHECK(r[0] * rat(1, 2) + r[1] * rat(3, 4) == 0);
    CHECK(q_rank_exact({Rat(0), Rat(0)}).rank == 0);
    CHECK(q_rank_exact({Rat(0), rat(5, 7)}).rank == 1);
}

TEST_CASE("closure classification on su2su2") {
    auto rho = realization::su2su2_block();
    SUBCASE("rational ratio gives a circle") {
        auto rep = classify_closure(rho, {1, 0, 0, 0.5, 0, 0});
        CHECK(rep.kind == OrbitKind::circle);
        CHECK(rep.torus_dim == 1);
    }
    SUBCASE("irrational ratio gives a 2-torus") {
        auto rep = classify_closure(rho, {1, 0, 0, std::sqrt(2.0), 0, 0});
        CHECK(rep.kind == OrbitKind::torus);
        CHECK(rep.torus_dim == 2);
        CHECK(rep.relations.empty());
        CHECK(rep.coeff_bound == 1000000);
    }
    SUBCASE("single block gives a circle") {
        auto rep = classify_closure(rho, {0, 1, 0, 0, 0, 0});
        CHECK(rep.kind == OrbitKind::circle);
    }
    SUBCASE("zero is a point") {
        CHECK(classify_closure(rho, zero_vec<double>(6)).kind == OrbitKind::fixed_point);
    }
    SUBCASE("rescaling does not change the classification") {
        SeededRng rng(17);
        for (double lam : {0.3, -2.0, 17.5}) {
            Vec<double> X = {1, 0, 0, std::sqrt(2.0), 0, 0};
            auto a = classify_closure(rho, X);
            auto b = classify_closure(rho, vec_scale(lam, X));
            CHECK(a.kind == b.kind);
            CHECK(a.torus_dim == b.torus_dim);
        }
    }
    SUBCASE("rational cartan directions are never tori (exact route)") {
        SeededRng rng(19);
        for (int t = 0; t < 10; ++t) {
            Rat p = random_rat(rng);
            // frequencies (1/2, p/2) exactly (block-diagonal spectrum)
            auto rep = classify_closure_exact({rat(1, 2), Rat(p / 2)});
            CHECK(rep.kind != OrbitKind::torus);
        }
    }
}

TEST_CASE("non-skew realization is classified as a line") {
    auto solv = realization::solvable2_affine();
    auto rep = classify_closure(solv, {1.0, 0.3});
    CHECK(rep.kind == OrbitKind::line);
}

TEST_CASE("su3 cartan direction with built-in relation") {
    auto rho = realization::su3_fundamental();
    // X = D1 + sqrt(2) D2 has spectrum {1, sqrt2 - 1, sqrt2}: rank 2 with the
    // relation th1 + th2 - th3 = 0
    Vec<double> X = zero_vec<double>(8);
    X[0] = 1.0;
    X[1] = std::sqrt(2.0);
    auto rep = classify_closure(rho, X);
    CHECK(rep.kind == OrbitKind::torus);
    CHECK(rep.torus_dim == 2);
    REQUIRE(rep.frequencies.size() == 3);
    CHECK(!rep.relations.empty());
}

TEST_CASE("circle closure cross-validates against the orbit period") {
    auto rho = realization::su2su2_block();
    Vec<double> X = {1, 0, 0, 1.5, 0, 0};  // frequencies 1/2 and 3/4, gcd 1/4
    auto rep = classify_closure(rho, X);
    REQUIRE(rep.kind == OrbitKind::circle);
    const double period = 8 * 3.14159265358979323846;
    CMat g = expm(Cplx(period, 0) * rho.map(X));
    CHECK(frob_norm(g - CMat::identity(4)) < 1e-6);
}

TEST_CASE("density check: dense irrational line vs closed orbit") {
    auto rho = realization::su2su2_block();
    SUBCASE("irrational winding covers the torus") {
        Vec<double> X = {1, 0, 0, std::sqrt(2.0), 0, 0};
        auto rep = classify_closure(rho, X);
        REQUIRE(rep.kind == OrbitKind::torus);
        auto dense = density_check(rho, X, rep, 1e4, 0.05, 100);
        CHECK(dense.covering_defect < 0.05);
    }
    SUBCASE("closed orbit keeps a gap no matter how long we sample") {
        Vec<double> X = {1, 0, 0, 0.5, 0, 0};
        auto rep = classify_closure(rho, X);
        ClosureReport fake = rep;  // project the circle onto both angles anyway
        fake.kind = OrbitKind::torus;
        fake.torus_dim = 2;
        auto d1 = density_check(rho, X, fake, 2000, 0.05, 100);
        auto d2 = density_check(rho, X, fake, 10000, 0.05, 100);
        CHECK(d1.covering_defect > 0.1);
        CHECK(d2.covering_defect > 0.1);
    }
    SUBCASE("single circle is fully covered, defect below the step") {
        Vec<double> X = {1, 0, 0, 0, 0, 0};
        auto rep = classify_closure(rho, X);
        REQUIRE(rep.kind == OrbitKind::circle);
        auto d = density_check(rho, X, rep, 200, 0.1, 100);
        CHECK(d.covering_defect <= 0.1);
    }
}
