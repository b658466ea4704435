#include <catch2/catch_amalgamated.hpp>

#include "test_helpers.hpp"

using namespace latshift;

TEST_CASE("covariogram point evaluations") {
    auto t = tri_unit();
    REQUIRE(covariogram_at(t, t, rp("0", "0")) == rat("1/2"));
    REQUIRE(covariogram_at(t, t, rp("1", "0")) == 0); // vertex touch
    REQUIRE(covariogram_at(t, t, rp("1/2", "0")) == rat("1/8"));
}

TEST_CASE("lattice sums, frozen examples") {
    auto t = tri_unit();
    SECTION("unit triangle against itself") {
        auto s = lattice_sum(t, t);
        REQUIRE(s.lattice_sum == rat("1/2")); // only n = 0 overlaps with area
        REQUIRE(s.integral == rat("1/4"));
        REQUIRE(s.covariance == rat("1/4"));
    }
    SECTION("unit square against itself") {
        auto s = lattice_sum(unit_square(), unit_square());
        REQUIRE(s.lattice_sum == 1);
        REQUIRE(s.integral == 1);
        REQUIRE(s.covariance == 0);
    }
    SECTION("triangle against its negation") {
        auto s = lattice_sum(t, t.negated());
        REQUIRE(s.covariance == rat("-1/4"));
    }
}

TEST_CASE("lattice sum reproduces the closed-form covariance exactly") {
    for (std::uint64_t i = 0; i < 8; ++i) {
        auto a = random_convex_polygon(307, 2 * i, -6, 6);
        auto b = random_convex_polygon(307, 2 * i + 1, -6, 6);
        INFO("pair " << i);
        auto s = lattice_sum(a, b);
        REQUIRE(s.covariance == covariance(a, b));
        REQUIRE(s.integral == a.area() * b.area());
    }
}

TEST_CASE("self covariogram sums dominate the squared area") {
    for (std::uint64_t i = 0; i < 8; ++i) {
        auto a = random_convex_polygon(311, i, -6, 6);
        auto s = lattice_sum(a, a);
        REQUIRE(s.lattice_sum >= s.integral);
        REQUIRE(s.lattice_sum >= 0);
    }
}

TEST_CASE("self covariogram is even") {
    for (std::uint64_t i = 0; i < 5; ++i) {
        auto a = random_convex_polygon(313, i, -5, 5);
        for (long nx = -3; nx <= 3; ++nx) {
            for (long ny = -3; ny <= 3; ++ny) {
                REQUIRE(covariogram_at(a, a, RatPoint(Rat(nx), Rat(ny))) ==
                        covariogram_at(a, a, RatPoint(Rat(-nx), Rat(-ny))));
            }
        }
    }
}

TEST_CASE("translate support is confined to the difference body") {
    for (std::uint64_t i = 0; i < 5; ++i) {
        auto a = random_convex_polygon(317, 2 * i, -5, 5);
        auto b = random_convex_polygon(317, 2 * i + 1, -5, 5);
        auto diff = minkowski_sum(a, b.negated());
        for (const auto& e : covariogram_table(a, b)) {
            auto pos = diff.classify(RatPoint(Rat(e.nx), Rat(e.ny)));
            REQUIRE(pos != IntPolygon::Position::Outside);
        }
    }
}
