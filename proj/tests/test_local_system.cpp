#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "nvcat/errors.hpp"
#include "support.hpp"

using namespace nvcat;
using testkit::q;

namespace {

const Field Q = Field::rationals();

Cochain random_cochain(std::mt19937_64& rng, const SimplicialComplex& x, Field f, int degree, const Scalar& twist) {
    return Cochain{degree, testkit::random_vec(rng, f, x.count(degree)), normalize_twist(twist)};
}

Vec add(Vec a, const Vec& b, const Scalar& c) {
    axpy(a, c, b);
    return a;
}

}  // namespace

TEST_CASE("twisted coboundary squares to zero") {
    std::mt19937_64 rng(31);
    for (int i = 0; i < 220; ++i) {
        auto c = testkit::random_case(rng);
        Field f = testkit::random_field(rng);
        Scalar a = testkit::random_nonzero(rng, f);
        int k = static_cast<int>(rng() % 2);
        if (c.complex.dimension() < k + 2) k = 0;
        auto u = random_cochain(rng, c.complex, f, k, a);
        auto du = twisted_coboundary(c.complex, c.xi, u);
        CHECK(du.degree == k + 1);
        CHECK(is_zero(twisted_coboundary(c.complex, c.xi, du).values));
        CHECK((coboundary_matrix(c.complex, c.xi, a, k + 1) * coboundary_matrix(c.complex, c.xi, a, k)).is_zero());
    }
}

TEST_CASE("Leibniz rule at cochain level") {
    std::mt19937_64 rng(32);
    for (int i = 0; i < 240; ++i) {
        auto c = testkit::random_case(rng);
        Field f = testkit::random_field(rng);
        const int top = c.complex.dimension();
        int p = static_cast<int>(rng() % 2), r = static_cast<int>(rng() % 2);
        if (p + r + 1 > top) p = r = 0;
        Scalar a = testkit::random_nonzero(rng, f), b = testkit::random_nonzero(rng, f);
        if (i % 5 == 0) b = a.inverse();
        auto u = random_cochain(rng, c.complex, f, p, a);
        auto v = random_cochain(rng, c.complex, f, r, b);
        auto lhs = twisted_coboundary(c.complex, c.xi, cup_twisted(c.complex, c.xi, u, v));
        auto t1 = cup_twisted(c.complex, c.xi, twisted_coboundary(c.complex, c.xi, u), v);
        auto t2 = cup_twisted(c.complex, c.xi, u, twisted_coboundary(c.complex, c.xi, v));
        CHECK(lhs.twist == normalize_twist(a * b));
        CHECK(lhs.values == add(t1.values, t2.values, Scalar(f, p % 2 ? -1 : 1)));
    }
}

TEST_CASE("coboundary is the transpose of the specialized boundary") {
    std::mt19937_64 rng(33);
    for (int i = 0; i < 60; ++i) {
        auto c = testkit::random_case(rng);
        Scalar a = testkit::random_nonzero(rng, Q);
        auto chains = build_twisted_complex(c.complex, c.xi, Q);
        for (int k = 0; k < c.complex.dimension(); ++k) {
            Matrix cob = coboundary_matrix(c.complex, c.xi, a, k);
            Matrix bt = chains.boundary_matrix(k + 1).evaluate(a).transpose();
            REQUIRE(cob.rows() == bt.rows());
            for (std::size_t r = 0; r < cob.rows(); ++r) CHECK(cob.row(r) == bt.row(r));
        }
    }
}

TEST_CASE("monodromy along loops") {
    auto c3 = testkit::corpus("c3");
    Monodromy m(q(2), c3.xi);
    const std::vector<int> forward{0, 1, 2, 0}, backward{0, 2, 1, 0};
    CHECK(m.along(c3.complex, forward) == q(2));
    CHECK(m.along(c3.complex, backward) == q(1, 2));
}

TEST_CASE("generic values avoid Supp and its inverses") {
    auto g = pick_generic({q(1), q(1, 2)}, Q, 3, 0);
    CHECK(g == std::vector<Scalar>{q(3), q(1, 3), q(5)});
    auto shifted = pick_generic({q(1), q(1, 2)}, Q, 3, 2);
    CHECK(shifted.front() == q(5));

    const Field f7 = Field::prime(7);
    auto p = pick_generic({Scalar(f7, 1), Scalar(f7, 4)}, f7, 2, 0);
    // 2 is excluded since 2^-1 = 4
    CHECK(p == std::vector<Scalar>{Scalar(f7, 3), Scalar(f7, 5)});
    CHECK_THROWS_AS(pick_generic({Scalar(f7, 1)}, f7, 6, 0), LimitError);

    std::mt19937_64 rng(34);
    for (int i = 0; i < 50; ++i) {
        std::vector<Scalar> supp{q(1)};
        for (int k = 0; k < 3; ++k) supp.push_back(testkit::random_nonzero(rng, Q, 5));
        auto picks = pick_generic(supp, Q, 5, rng() % 20);
        CHECK(picks.size() == 5);
        for (const auto& a : picks)
            for (const auto& s : supp) {
                CHECK(a != s);
                CHECK(a.inverse() != s);
            }
    }
}

TEST_CASE("twisted cohomology dimensions") {
    auto torus = testkit::corpus("torus");
    for (const auto& a : {q(3), q(1, 3), q(5), q(-7, 2), q(11)})
        CHECK(twisted_cohomology(torus.complex, torus.xi, a).dims() == std::vector<std::size_t>{0, 0, 0});
    CHECK(twisted_cohomology(torus.complex, torus.xi, q(1)).dims() == std::vector<std::size_t>{1, 2, 1});

    auto g2 = testkit::corpus("genus2");
    CHECK(twisted_cohomology(g2.complex, g2.xi, q(3)).dims() == std::vector<std::size_t>{0, 2, 0});

    auto mt = testkit::corpus("mapping_torus_deg2");
    CHECK(twisted_cohomology(mt.complex, mt.xi, q(3)).dims() == std::vector<std::size_t>{0, 0, 0});
    CHECK(twisted_cohomology(mt.complex, mt.xi, q(2)).dims() == std::vector<std::size_t>{0, 1, 1});
    CHECK(twisted_cohomology(mt.complex, mt.xi, q(1, 2)).dims() == std::vector<std::size_t>{0, 0, 0});
    CHECK(twisted_cohomology(mt.complex, mt.xi, Scalar(Field::prime(5), 2)).dims() == std::vector<std::size_t>{0, 1, 1});
}

TEST_CASE("dimensions follow the module structure of the cover") {
    for (const auto& name : testkit::corpus_names()) {
        auto in = testkit::corpus(name);
        INFO(name);
        auto h = cover_homology(build_twisted_complex(in.complex, in.xi, Q));
        std::vector<Scalar> points{q(1), q(2), q(1, 2), q(-1), q(3), q(-5, 3)};
        for (const auto& a : points) {
            auto dims = twisted_cohomology(in.complex, in.xi, a).dims();
            for (int k = 0; k <= in.complex.dimension(); ++k) CHECK(dims[k] == testkit::predicted_betti(h, a, k));
        }
    }
}

TEST_CASE("dimensions only jump up away from generic values") {
    for (const char* name : {"mapping_torus_deg2", "genus2", "c3_double", "bouquet_torus_circle", "torus"}) {
        auto in = testkit::corpus(name);
        auto c = analyze_cover(in.complex, in.xi, Q);
        auto generic = twisted_cohomology(in.complex, in.xi, pick_generic(c.torsion, 1, 0).front()).dims();
        CHECK(twisted_cohomology(in.complex, in.xi, q(2)).dims()[0] == 0);
        for (const auto& s : c.torsion.supp)
            for (const auto& a : {s, s.inverse()}) {
                auto d = twisted_cohomology(in.complex, in.xi, a).dims();
                for (std::size_t k = 0; k < d.size(); ++k) CHECK(d[k] >= generic[k]);
            }
    }
}

TEST_CASE("cup pairing on the genus-2 surface") {
    auto g2 = testkit::corpus("genus2");
    const Scalar a = q(3);
    auto ha = twisted_cohomology(g2.complex, g2.xi, a, 1);
    auto hb = twisted_cohomology(g2.complex, g2.xi, a.inverse(), 1);
    auto h2 = untwisted_cohomology(g2.complex, Q, 2);
    REQUIRE(ha.dimension() == 2);
    REQUIRE(hb.dimension() == 2);
    Matrix pairing(Q, 2, 2);
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) {
            Cochain u{1, ha.representatives()[i], a}, v{1, hb.representatives()[j], a.inverse()};
            auto uv = cup_twisted(g2.complex, g2.xi, u, v);
            CHECK_FALSE(uv.twist);
            CHECK(h2.is_cocycle(uv.values));
            pairing(i, j) = h2.coordinates(uv.values)[0];
        }
    CHECK(rank(pairing) == 2);

    // changing a representative by a coboundary changes the product by a coboundary
    std::mt19937_64 rng(35);
    for (int i = 0; i < 20; ++i) {
        Cochain f0{0, testkit::random_vec(rng, Q, g2.complex.count(0)), a};
        Cochain u{1, ha.representatives()[i % 2], a}, v{1, hb.representatives()[(i / 2) % 2], a.inverse()};
        Cochain moved{1, add(u.values, twisted_coboundary(g2.complex, g2.xi, f0).values, q(1)), a};
        auto diff = add(cup_twisted(g2.complex, g2.xi, moved, v).values, cup_twisted(g2.complex, g2.xi, u, v).values, q(-1));
        CHECK(h2.is_exact(diff));
    }
}

TEST_CASE("cochain JSON round trip") {
    auto mt = testkit::corpus("mapping_torus_deg2");
    std::mt19937_64 rng(36);
    for (int i = 0; i < 20; ++i) {
        Field f = testkit::random_field(rng);
        Cochain c{1, testkit::random_vec(rng, f, mt.complex.count(1)), normalize_twist(testkit::random_nonzero(rng, f))};
        auto j = cochain_json(mt.complex, c);
        auto back = cochain_from_json(mt.complex, f, j);
        CHECK(back.degree == 1);
        CHECK(back.values == c.values);
        CHECK(back.twist == c.twist);
    }
    nlohmann::json bad = {{"degree", 1}, {"twist", nullptr}, {"values", {{{0, 99}, "1"}}}};
    CHECK_THROWS_AS(cochain_from_json(mt.complex, Q, bad), ValidationError);
}
