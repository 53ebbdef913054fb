#include "doctest.h"

#include "geovec/catalog.hpp"
#include "geovec/charpoly.hpp"
#include "geovec/connection.hpp"
#include "geovec/rng.hpp"

using namespace geovec;

namespace {

std::vector<Rat> random_poly(SeededRng& rng, int deg) {
    std::vector<Rat> p(deg + 1);
    for (auto& c : p) c = random_rat(rng, 8);
    while (p[deg] == 0) p[deg] = random_rat(rng, 8);
    return p;
}

}  // namespace

TEST_CASE("faddeev-leverrier characteristic polynomial") {
    SUBCASE("2x2 known case") {
        Mat<Rat> m(2, 2);
        m(0, 0) = 1; m(1, 1) = 2;
        auto p = charpoly(m);  // t^2 - 3t + 2
        CHECK(p == std::vector<Rat>{Rat(2), Rat(-3), Rat(1)});
    }
    SUBCASE("matches determinant and trace on random matrices") {
        SeededRng rng(41);
        for (int t = 0; t < 10; ++t) {
            int n = 3 + static_cast<int>(rng.next_int(0, 2));
            Mat<Rat> m(n, n);
            for (auto& v : m.a) v = random_rat(rng, 5);
            auto p = charpoly(m);
            REQUIRE(static_cast<int>(p.size()) == n + 1);
            CHECK(p[n] == 1);
            Rat tr = 0;
            for (int i = 0; i < n; ++i) tr += m(i, i);
            CHECK(p[n - 1] == -tr);
            // p(0) = det(-M) = (-1)^n det M
            Rat d = det(m);
            CHECK(p[0] == (n % 2 == 0 ? d : Rat(-d)));
            // Cayley-Hamilton: p(M) = 0
            Mat<Rat> acc(n, n), power = Mat<Rat>::identity(n);
            for (std::size_t k = 0; k < p.size(); ++k) {
                acc = acc + p[k] * power;
                if (k + 1 < p.size()) power = m * power;
            }
            CHECK(acc == Mat<Rat>(n, n));
        }
    }
}

TEST_CASE("subresultant resultant agrees with the sylvester determinant") {
    SeededRng rng(43);
    for (int t = 0; t < 40; ++t) {
        int df = 1 + static_cast<int>(rng.next_int(0, 4));
        int dg = 1 + static_cast<int>(rng.next_int(0, 4));
        auto f = random_poly(rng, df), g = random_poly(rng, dg);
        // clear denominators to integers for the subresultant route
        mpz_class D = 1, E = 1;
        for (const auto& c : f) D = lcm(D, mpz_class(c.get_den()));
        for (const auto& c : g) E = lcm(E, mpz_class(c.get_den()));
        std::vector<mpz_class> F, Gp;
        for (const auto& c : f) F.push_back(mpz_class(Rat(c * Rat(D)).get_num()));
        for (const auto& c : g) Gp.push_back(mpz_class(Rat(c * Rat(E)).get_num()));
        Rat lhs = Rat(poly::resultant(F, Gp));
        // Res(Df, Eg) = D^deg(g) E^deg(f) Res(f, g)
        Rat scale = Rat(1);
        for (int i = 0; i < dg; ++i) scale *= Rat(D);
        for (int i = 0; i < df; ++i) scale *= Rat(E);
        Rat rhs = scale * sylvester_resultant(f, g);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("resultant detects common roots") {
    // f = (t-1)(t-2), g = (t-1)(t+5): common root t=1
    std::vector<mpz_class> f = {2, -3, 1};
    std::vector<mpz_class> g = {-5, 4, 1};
    CHECK(poly::resultant(f, g) == 0);
}

TEST_CASE("discriminant basics") {
    // diag(1,2): p = t^2 - 3t + 2, disc = 1
    Mat<Rat> m(2, 2);
    m(0, 0) = 1; m(1, 1) = 2;
    CHECK(charpoly_discriminant(m) == Rat(1));
    // identity: repeated eigenvalue
    CHECK(charpoly_discriminant(Mat<Rat>::identity(2)) == Rat(0));
    // diag(a_i): disc = prod_{i<j} (a_i - a_j)^2
    Mat<Rat> d3(3, 3);
    d3(0, 0) = rat(1, 2); d3(1, 1) = Rat(2); d3(2, 2) = Rat(-1);
    Rat expect = (rat(1, 2) - 2) * (rat(1, 2) - 2) * (rat(1, 2) + 1) * (rat(1, 2) + 1) *
                 (Rat(2) + 1) * (Rat(2) + 1);
    CHECK(charpoly_discriminant(d3) == expect);
}

TEST_CASE("discriminant of rational polynomials with denominators") {
    // p = (t - 1/2)(t - 1/3) = t^2 - 5/6 t + 1/6, disc = (1/2 - 1/3)^2 = 1/36
    std::vector<Rat> p = {rat(1, 6), rat(-5, 6), Rat(1)};
    CHECK(poly_discriminant(p) == rat(1, 36));
}

TEST_CASE("ricci discriminant of the su2su2 frame metric: exact small-d values") {
    // D(d) * d^44 approaches 3^18 * 17^2 / 2^8; at d = 1/100 the exact value
    // is already within 0.2% (frozen from the exact computation)
    auto m = catalog::su2su2_metric(rat(1, 100));
    ConnectionTable<Rat> conn(m);
    Rat D = charpoly_discriminant(conn.ricci_operator());
    CHECK(D != 0);
    Rat scaled = D;
    for (int i = 0; i < 44; ++i) scaled *= rat(1, 100);
    Rat target = Rat(mpz_class("111964521321")) / Rat(256);  // 3^18 * 17^2 / 2^8
    Rat rel = (scaled - target) / target;
    CHECK(scalar_traits<Rat>::abs(rel) < rat(2, 1000));
    CHECK(scalar_traits<Rat>::abs(rel) > rat(1, 1000));
}

TEST_CASE("ricci operator of the frame metric has distinct eigenvalues at small d") {
    auto m = catalog::su2su2_metric(rat(1, 10));
    ConnectionTable<Rat> conn(m);
    CHECK(charpoly_discriminant(conn.ricci_operator()) != 0);
}
