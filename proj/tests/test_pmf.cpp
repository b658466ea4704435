#include <catch2/catch_amalgamated.hpp>

#include "test_helpers.hpp"

using namespace latshift;

TEST_CASE("uniform laws and convolution") {
    REQUIRE(Pmf::uniform(1) == Pmf::point(0));
    REQUIRE(convolve(Pmf::uniform(2), Pmf::uniform(2)) ==
            Pmf::from_map({{0, rat("1/4")}, {1, rat("1/2")}, {2, rat("1/4")}}));
    REQUIRE(convolve(Pmf::uniform(2), Pmf::uniform(3)) ==
            Pmf::from_map({{0, rat("1/6")}, {1, rat("1/3")}, {2, rat("1/3")}, {3, rat("1/6")}}));
    REQUIRE_THROWS_AS(Pmf::uniform(0), Error);
}

TEST_CASE("pmf validation") {
    REQUIRE_THROWS_AS(Pmf::from_map({{0, rat("1/2")}}), Error);
    REQUIRE_THROWS_AS(Pmf::from_map({{0, rat("3/2")}, {1, rat("-1/2")}}), Error);
    // zero entries are dropped
    auto p = Pmf::from_map({{0, rat("1")}, {5, Rat(0)}});
    REQUIRE(p.support_size() == 1);
}

TEST_CASE("mean, variance and central moments of uniform sums") {
    for (long n : {1L, 2L, 5L, 9L}) {
        auto u = Pmf::uniform(n);
        REQUIRE(u.mean() == Rat(n - 1, 2));
        REQUIRE(u.variance() == Rat(n * n - 1, 12));
    }
    auto s = convolve(Pmf::uniform(3), Pmf::uniform(4));
    REQUIRE(s.mean() == Pmf::uniform(3).mean() + Pmf::uniform(4).mean());
    REQUIRE(s.variance() == Pmf::uniform(3).variance() + Pmf::uniform(4).variance());
}

TEST_CASE("support transforms") {
    auto p = Pmf::from_map({{0, rat("1/4")}, {1, rat("1/2")}, {2, rat("1/4")}});
    SECTION("shift") {
        REQUIRE(shift(p, 3).support_min() == 3);
        REQUIRE(shift(p, 3).mean() == p.mean() + 3);
    }
    SECTION("dilation") {
        auto d = scale_support(p, 3);
        REQUIRE(d.support_max() == 6);
        REQUIRE(d.mean() == p.mean() * 3);
        REQUIRE(d.variance() == p.variance() * 9);
    }
    SECTION("mod reduction") {
        REQUIRE(reduce_mod(p, 2) == Pmf::uniform(2));
        REQUIRE(reduce_mod(p, 1) == Pmf::point(0));
        REQUIRE(reduce_mod(Pmf::from_map({{3, rat("1/2")}, {6, rat("1/2")}}), 3) == Pmf::point(0));
        // negative support reduces into {0..n-1}
        REQUIRE(reduce_mod(Pmf::point(-5), 3) == Pmf::point(1));
    }
}

TEST_CASE("centered view") {
    auto c1 = centered_pmf(Pmf::from_map({{0, rat("1/2")}, {1, rat("1/2")}}));
    REQUIRE(c1.at(rat("-1/2")) == rat("1/2"));
    REQUIRE(c1.at(rat("1/2")) == rat("1/2"));

    auto c2 = centered_pmf(Pmf::point(1));
    REQUIRE(c2.at(Rat(0)) == 1);

    auto c3 = centered_pmf(Pmf::from_map({{0, rat("1/4")}, {1, rat("1/2")}, {2, rat("1/4")}}));
    REQUIRE(c3.at(Rat(-1)) == rat("1/4"));
    REQUIRE(c3.at(Rat(0)) == rat("1/2"));
    REQUIRE(c3.at(Rat(1)) == rat("1/4"));
}

TEST_CASE("convolutions of uniforms are symmetric about the mean") {
    for (long a : {1L, 2L, 4L}) {
        for (long b : {2L, 3L, 7L}) {
            auto p = convolve(Pmf::uniform(a), Pmf::uniform(b));
            REQUIRE(p.symmetric_about_mean());
            REQUIRE(p.support_contiguous());
        }
    }
}
