#include <catch2/catch_amalgamated.hpp>

#include "test_helpers.hpp"

using namespace latshift;

TEST_CASE("count_shifted at explicit shifts") {
    SECTION("unit square, interior shift") {
        auto r = count_shifted(unit_square(), rp("1/3", "1/3"));
        REQUIRE(r.value == 1);
        REQUIRE(r.boundary_clean);
    }
    SECTION("unit triangle") {
        REQUIRE(count_shifted(tri_unit(), rp("3/4", "3/4")).value == 1);
        REQUIRE(count_shifted(tri_unit(), rp("1/4", "1/4")).value == 0);
    }
    SECTION("boundary hits are flagged") {
        auto r = count_shifted(unit_square(), rp("0", "0"));
        REQUIRE(r.value == 4);
        REQUIRE_FALSE(r.boundary_clean);
        REQUIRE_FALSE(probe_shift(unit_square(), rp("1/2", "0")).boundary_clean);
        REQUIRE(probe_shift(unit_square(), rp("1/3", "1/5")).boundary_clean);
    }
}

TEST_CASE("row-sliced count agrees with the bounding-box scan") {
    for (std::uint64_t i = 0; i < 30; ++i) {
        auto p = random_convex_polygon(31, i);
        auto plan = CountPlan::make(p);
        for (std::uint64_t j = 0; j < 20; ++j) {
            DyadicPoint d = shift_at(37, i * 100 + j, 0);
            RatPoint x = d.to_rat();
            auto a = count_shifted(p, x);
            auto b = detail::count_shifted_rows(p, x);
            auto c = count_shifted(plan, d);
            REQUIRE(a.value == b.value);
            REQUIRE(a.boundary_clean == b.boundary_clean);
            REQUIRE(a.value == c.value);
            REQUIRE(a.boundary_clean == c.boundary_clean);
        }
    }
    // some low-denominator shifts where boundary hits actually occur
    auto p = pentagon();
    auto plan = CountPlan::make(p);
    for (long nx = 0; nx <= 4; ++nx) {
        for (long ny = 0; ny <= 4; ++ny) {
            RatPoint x(Rat(nx, 4), Rat(ny, 4));
            auto a = count_shifted(p, x);
            auto b = detail::count_shifted_rows(p, x);
            REQUIRE(a.value == b.value);
            REQUIRE(a.boundary_clean == b.boundary_clean);
        }
    }
}

TEST_CASE("oriented parallelogram counts") {
    SECTION("frozen examples") {
        REQUIRE(count_parallelogram_oriented(IntVec(1, 0), rp("1/2", "1/2")) == 0);
        REQUIRE(count_parallelogram_oriented(IntVec(0, 1), rp("1/2", "1/2")) == 1);
        REQUIRE(count_parallelogram_oriented(IntVec(2, 0), rp("1/3", "1/2")) == 0);
    }
    SECTION("ceiling closed form, frozen examples") {
        REQUIRE(count_via_ceiling(IntVec(0, 1), rp("1/2", "1/2")) == 1);
        REQUIRE(count_via_ceiling(IntVec(1, 0), rp("0", "0")) == 0);
        REQUIRE(count_via_ceiling(IntVec(4, 6), rp("1/5", "1/7")) == 2);
        REQUIRE(count_parallelogram_oriented(IntVec(4, 6), rp("1/5", "1/7")) == 2);
    }
    SECTION("zero vector rejected") {
        REQUIRE_THROWS_AS(count_parallelogram_oriented(IntVec(0, 0), rp("1/2", "1/2")), Error);
        REQUIRE_THROWS_AS(count_via_ceiling(IntVec(0, 0), rp("1/2", "1/2")), Error);
    }
}

TEST_CASE("ceiling formula equals the oriented count at clean shifts") {
    const IntVec dirs[] = {{1, 0},  {0, 1},  {-1, 1}, {1, 1},  {2, 1},  {1, -2},
                           {3, 2},  {-3, 1}, {4, 6},  {5, -3}, {0, -4}, {7, 2},
                           {-2, -3}, {6, 1}};
    for (const auto& v : dirs) {
        const IntVec u = primitive_direction(v);
        std::uint64_t tested = 0;
        for (std::uint64_t j = 0; tested < 400; ++j) {
            DyadicPoint d = shift_at(41, j, 0);
            RatPoint x = d.to_rat();
            if (denominator(wedge(x, u)) == 1) continue; // integral wedge: unclean
            ++tested;
            INFO("v=(" << v.x << "," << v.y << ") j=" << j);
            REQUIRE(count_parallelogram_oriented(v, x) == count_via_ceiling(v, x));
        }
    }
}

TEST_CASE("side decomposition equals the direct count at clean shifts") {
    SECTION("frozen examples") {
        REQUIRE(count_via_sides(tri_unit(), rp("3/4", "3/4")) == 1);
        REQUIRE(count_via_sides(tri_unit(), rp("1/4", "1/4")) == 0);
        // centrally symmetric polygon: constant count = area
        REQUIRE(count_via_sides(unit_square(), rp("1/3", "2/7")) == 1);
        REQUIRE(count_via_sides(unit_square(), rp("9/11", "5/8")) == 1);
    }
    SECTION("random corpus, random clean shifts") {
        for (std::uint64_t i = 0; i < 25; ++i) {
            auto p = random_convex_polygon(43, i, -10, 10);
            auto plan = CountPlan::make(p);
            for (std::uint64_t j = 0; j < 40; ++j) {
                DyadicPoint d = random_clean_shift(plan, 47, i * 1000 + j);
                RatPoint x = d.to_rat();
                auto direct = count_shifted(p, x);
                REQUIRE(direct.boundary_clean);
                REQUIRE(count_via_sides(p, x) == direct.value);
                REQUIRE(count_via_sides(plan, d) == direct.value);
            }
        }
    }
}

TEST_CASE("centrally symmetric profiles give constant counts equal to the area") {
    for (std::uint64_t i = 0; i < 8; ++i) {
        auto p = random_convex_polygon(53, i);
        auto sym = minkowski_sum(p, p.negated());
        REQUIRE(sym.side_profile().centrally_symmetric());
        REQUIRE(denominator(sym.area()) == 1);
        auto plan = CountPlan::make(sym);
        const Int expected = numerator(sym.area());
        for (std::uint64_t j = 0; j < 25; ++j) {
            DyadicPoint d = random_clean_shift(plan, 59, i * 100 + j);
            auto c = count_shifted(sym, d.to_rat());
            REQUIRE(c.boundary_clean);
            REQUIRE(Int(c.value) == expected);
        }
    }
}

TEST_CASE("Minkowski count differences are constant across clean shifts") {
    for (std::uint64_t i = 0; i < 6; ++i) {
        auto p = random_convex_polygon(61, 2 * i);
        auto q = random_convex_polygon(61, 2 * i + 1);
        auto s = minkowski_sum(p, q);
        auto plan_all = CountPlan::make(s); // its directions include p's and q's
        bool have = false;
        std::int64_t expected_diff = 0;
        for (std::uint64_t j = 0; j < 30; ++j) {
            DyadicPoint d = random_clean_shift(plan_all, 67, i * 100 + j);
            RatPoint x = d.to_rat();
            auto cp = count_shifted(p, x);
            auto cq = count_shifted(q, x);
            auto cs = count_shifted(s, x);
            if (!(cp.boundary_clean && cq.boundary_clean && cs.boundary_clean)) continue;
            std::int64_t diff = cs.value - cp.value - cq.value;
            if (!have) { expected_diff = diff; have = true; }
            REQUIRE(diff == expected_diff);
        }
        REQUIRE(have);
    }
}
