#include <catch2/catch_amalgamated.hpp>

#include "test_helpers.hpp"

#include <complex>

using namespace latshift;

namespace {

double cdist(std::complex<double> a, std::complex<double> b) { return std::abs(a - b); }

} // namespace

// The quarter-turn convention is pinned here: rotate_quarter((x,y)) = (y,-x)
// is the one under which the closed form reproduces direct integration over
// the unit triangle. Everything downstream relies on this case.
TEST_CASE("rotation convention anchored against the integral") {
    auto t = tri_unit();
    const IntVec freqs[] = {{1, 0}, {0, 1}, {1, 1}};
    for (const auto& m : freqs) {
        auto closed = fourier_coeff(t, m).to_complex();
        auto integral = fourier_quadrature(t, m);
        INFO("m=(" << m.x << "," << m.y << ")");
        REQUIRE(cdist(closed, integral) < 1e-12);
    }
}

TEST_CASE("closed-form coefficients, frozen examples") {
    auto t = tri_unit();
    SECTION("unit frequencies") {
        auto c = fourier_coeff(t, IntVec(1, 0));
        REQUIRE_FALSE(c.zero_freq);
        REQUIRE(c.factor == 1);
        REQUIRE(cdist(c.to_complex(), {0.0, -0.15915494309189535}) < 1e-12);
    }
    SECTION("off-lattice-direction frequency vanishes") {
        REQUIRE(fourier_coeff(t, IntVec(1, -1)).factor == 0);
    }
    SECTION("zero frequency is the area") {
        auto c = fourier_coeff(t, IntVec(0, 0));
        REQUIRE(c.zero_freq);
        REQUIRE(c.factor == rat("1/2"));
        REQUIRE(c.to_complex() == std::complex<double>(0.5, 0.0));
    }
    SECTION("higher multiples decay as 1/k") {
        REQUIRE(fourier_coeff(t, IntVec(2, 0)).factor == rat("1/2"));
        REQUIRE(fourier_coeff(t, IntVec(0, 3)).factor == rat("1/3"));
        // the diagonal family carries the opposite sign to the axis families
        REQUIRE(fourier_coeff(t, IntVec(1, 1)).factor == -1);
        REQUIRE(fourier_coeff(t, IntVec(2, 2)).factor == rat("-1/2"));
    }
}

TEST_CASE("quadrature oracle basics") {
    REQUIRE(cdist(fourier_quadrature(tri_unit(), IntVec(1, 0)),
                  {0.0, -0.15915494309189535}) < 1e-12);
    REQUIRE(cdist(fourier_quadrature(tri_unit(), IntVec(1, 1)),
                  {0.0, +0.15915494309189535}) < 1e-12);
    // full-period integral over the unit square vanishes
    REQUIRE(std::abs(fourier_quadrature(unit_square(), IntVec(1, 0))) < 1e-12);
    REQUIRE_THROWS_MATCHES(fourier_quadrature(tri_unit(), IntVec(1, 0), 1e-15), Error,
                           Catch::Matchers::Predicate<Error>([](const Error& e) {
                               return e.code() == Errc::ToleranceNotMet;
                           }));
}

TEST_CASE("closed form matches quadrature across frequencies and polygons") {
    for (std::uint64_t i = 0; i < 6; ++i) {
        auto p = random_convex_polygon(211, i);
        for (long mx = -4; mx <= 4; ++mx) {
            for (long my = -4; my <= 4; ++my) {
                IntVec m(mx, my);
                INFO("polygon " << i << " m=(" << mx << "," << my << ")");
                REQUIRE(cdist(fourier_coeff(p, m).to_complex(), fourier_quadrature(p, m)) < 1e-8);
            }
        }
    }
}

TEST_CASE("conjugate symmetry") {
    for (std::uint64_t i = 0; i < 8; ++i) {
        auto p = random_convex_polygon(223, i);
        for (long mx = -3; mx <= 3; ++mx) {
            for (long my = -3; my <= 3; ++my) {
                if (mx == 0 && my == 0) continue;
                auto a = fourier_coeff(p, IntVec(mx, my)).to_complex();
                auto b = fourier_coeff(p, IntVec(-mx, -my)).to_complex();
                REQUIRE(cdist(a, std::conj(b)) < 1e-15);
            }
        }
    }
}

TEST_CASE("sparsity off the side-orthogonal rays") {
    for (std::uint64_t i = 0; i < 5; ++i) {
        auto p = random_convex_polygon(227, i);
        auto prof = p.side_profile();
        std::uint64_t tested = 0;
        for (std::uint64_t j = 0; tested < 30; ++j) {
            long mx = static_cast<long>(bounded(229, i * 1000 + 2 * j, 13)) - 6;
            long my = static_cast<long>(bounded(229, i * 1000 + 2 * j + 1, 13)) - 6;
            IntVec m(mx, my);
            if (m.is_zero()) continue;
            bool orthogonal = false;
            for (const auto& [d, l] : prof.entries()) {
                if (dot(m, d) == 0) orthogonal = true;
            }
            if (orthogonal) continue;
            ++tested;
            REQUIRE(fourier_coeff(p, m).factor == 0);
            REQUIRE(std::abs(fourier_quadrature(p, m)) < 1e-8);
        }
    }
}

TEST_CASE("coefficient transforms under a lattice symmetry") {
    for (std::uint64_t i = 0; i < 6; ++i) {
        auto p = random_convex_polygon(233, i, -5, 5);
        auto a = random_unimodular(239, i, p, Int(40));
        auto ap = apply_unimodular(a, p);
        for (long mx = -2; mx <= 2; ++mx) {
            for (long my = -2; my <= 2; ++my) {
                if (mx == 0 && my == 0) continue;
                IntVec m(mx, my);
                auto lhs = fourier_coeff(ap, m);
                auto rhs = fourier_coeff(p, a.transpose().apply(m));
                REQUIRE(lhs.factor == rhs.factor);
            }
        }
    }
}

TEST_CASE("coefficients add under dissection") {
    // split the unit square into two triangles along the diagonal
    auto lower = poly({{0, 0}, {1, 0}, {1, 1}});
    auto upper = poly({{0, 0}, {1, 1}, {0, 1}});
    for (long mx = -3; mx <= 3; ++mx) {
        for (long my = -3; my <= 3; ++my) {
            if (mx == 0 && my == 0) continue;
            IntVec m(mx, my);
            REQUIRE(fourier_coeff(lower, m).factor + fourier_coeff(upper, m).factor ==
                    fourier_coeff(unit_square(), m).factor);
        }
    }
    // and a random polygon split by a vertex chord
    for (std::uint64_t i = 0; i < 5; ++i) {
        auto p = random_convex_polygon(241, i);
        if (p.size() < 4) continue;
        const auto& v = p.vertices();
        std::size_t cut = p.size() / 2;
        std::vector<IntVec> first(v.begin(), v.begin() + static_cast<long>(cut) + 1);
        std::vector<IntVec> second(v.begin() + static_cast<long>(cut), v.end());
        second.push_back(v.front());
        auto p1 = IntPolygon::validate(first);
        auto p2 = IntPolygon::validate(second);
        for (const IntVec& m : {IntVec(1, 0), IntVec(1, 2), IntVec(-2, 3)}) {
            REQUIRE(fourier_coeff(p1, m).factor + fourier_coeff(p2, m).factor ==
                    fourier_coeff(p, m).factor);
        }
    }
}

TEST_CASE("covariance series") {
    auto t = tri_unit();
    SECTION("converges to the closed-form covariance at rate 1/R") {
        double prev_err = 1.0;
        for (long radius : {10L, 50L, 100L, 200L}) {
            double s = covariance_series(t, t, radius);
            double err = std::abs(s - 0.25);
            REQUIRE(err <= 0.16 / static_cast<double>(radius));
            REQUIRE(err <= prev_err);
            prev_err = err;
        }
    }
    SECTION("no shared side directions means exact zero") {
        REQUIRE(covariance_series(t, unit_square(), 50) == 0.0);
        auto p = poly({{0, 0}, {2, 1}, {1, 3}});
        REQUIRE(covariance(t, p) == 0);
        REQUIRE(covariance_series(t, p, 50) == 0.0);
    }
    SECTION("matches the exact covariance on corpus pairs") {
        for (std::uint64_t i = 0; i < 5; ++i) {
            auto p = random_convex_polygon(251, 2 * i);
            auto q = random_convex_polygon(251, 2 * i + 1);
            double s = covariance_series(p, q, 400);
            REQUIRE(std::abs(s - rat_double(covariance(p, q))) < 0.05);
        }
    }
}

TEST_CASE("central moment series") {
    auto t = tri_unit();
    SECTION("order two reproduces the covariance series") {
        for (long radius : {5L, 20L, 60L}) {
            REQUIRE(std::abs(central_moment_series(t, 2, radius) -
                             covariance_series(t, t, radius)) < 1e-14);
        }
    }
    SECTION("odd orders vanish identically") {
        REQUIRE(central_moment_series(t, 3, 50) == 0.0);
        REQUIRE(central_moment_series(pentagon(), 3, 20) == 0.0);
    }
    SECTION("fourth moment approaches the exact pmf value") {
        const double exact = rat_double(exact_pmf(t).central_moment(4)); // 1/16
        REQUIRE(exact == 0.0625);
        REQUIRE(std::abs(central_moment_series(t, 4, 50) - exact) < 0.01);
    }
}
