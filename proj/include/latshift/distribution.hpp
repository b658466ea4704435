#pragma once

// Exact law of the lattice count of a randomly shifted polygon.
//
// The count x -> X_P(x) is piecewise constant on the unit square: it can
// only change across the lines wedge(x, u) = k for side directions u and
// integers k. Slicing the square by every such line yields convex rational
// cells; the law is the aggregation of cell areas by the count evaluated at
// an interior point of each cell. For triangles there is also the closed
// form as a shifted convolution of uniform laws, implemented independently.
//
// Cell counts grow roughly with the square of the total level-line count
// (about the affine perimeter times the coordinate magnitude), which makes
// this decomposition the scaling bottleneck of the library; it is sized for
// desk-scale polygons, not for huge coordinates.

#include "latshift/clip.hpp"
#include "latshift/counting.hpp"
#include "latshift/pmf.hpp"
#include "latshift/polygon.hpp"
#include "latshift/rational.hpp"
#include "latshift/vec.hpp"

#include <cstdint>
#include <set>
#include <vector>

namespace latshift {

struct Cell {
    RatPolygon poly;
    std::int64_t value{0};
    Rat probability; // = area of the cell
};

// Upper bound on the number of values X_P can take: affine perimeter - 1.
inline std::int64_t support_bound(const IntPolygon& p) {
    return to_i64(p.boundary_count() - 1);
}

// gcd of the affine side lengths. The count decomposes into a constant plus
// length-weighted ceiling terms, so its values are confined to an arithmetic
// progression with this step. Supports observed in practice are contiguous
// within that progression; step 1 means plain contiguity.
inline Int support_step(const IntPolygon& p) {
    Int g = 0;
    for (const auto& s : p.sides()) g = boost::multiprecision::gcd(g, affine_length(s));
    return g;
}

namespace detail {

// Splits a convex cell by the line wedge(x,u) = k into the <= side and the
// >= side. Only called with the line strictly crossing the cell interior.
inline void split_by_level(const RatPolygon& cell, const IntVec& u, const Int& k,
                           RatPolygon& below, RatPolygon& above) {
    const Rat a(u.y), b(-u.x), c{Rat(k)};
    below = clip_halfplane(cell, a, b, c);
    above = clip_halfplane(cell, -a, -b, -c);
}

inline RatPolygon unit_square() {
    return {RatPoint(Rat(0), Rat(0)), RatPoint(Rat(1), Rat(0)),
            RatPoint(Rat(1), Rat(1)), RatPoint(Rat(0), Rat(1))};
}

// Any interior point of a convex positive-area cell; the vertex average.
inline RatPoint interior_point(const RatPolygon& cell) {
    Rat sx(0), sy(0);
    for (const auto& v : cell) {
        sx += v.x;
        sy += v.y;
    }
    Rat n(static_cast<long>(cell.size()));
    return RatPoint(sx / n, sy / n);
}

} // namespace detail

// The full arrangement of level lines inside the unit square, one convex
// cell per constancy region of X_P.
inline std::vector<Cell> decompose_unit_square(const IntPolygon& p) {
    std::set<IntVec> dirs;
    const SideProfile prof = p.side_profile();
    for (const auto& [d, l] : prof.entries()) dirs.insert(canonical_sign(d));

    std::vector<RatPolygon> cells{detail::unit_square()};
    for (const IntVec& u : dirs) {
        std::vector<RatPolygon> next;
        next.reserve(cells.size() * 2);
        for (const auto& cell : cells) {
            Rat wmin, wmax;
            bool first = true;
            for (const auto& v : cell) {
                Rat w = wedge(v, u);
                if (first) { wmin = wmax = w; first = false; }
                else { wmin = std::min(wmin, w); wmax = std::max(wmax, w); }
            }
            // integer levels strictly inside (wmin, wmax)
            Int k = rat_floor(wmin) + 1;
            const Int k_last = rat_ceil(wmax) - 1;
            if (k > k_last) {
                next.push_back(cell);
                continue;
            }
            RatPolygon rest = cell;
            for (; k <= k_last; ++k) {
                RatPolygon below, above;
                detail::split_by_level(rest, u, k, below, above);
                if (below.size() >= 3) next.push_back(std::move(below));
                rest = std::move(above);
            }
            if (rest.size() >= 3) next.push_back(std::move(rest));
        }
        cells = std::move(next);
    }

    std::vector<Cell> out;
    out.reserve(cells.size());
    for (auto& cell : cells) {
        Rat area = polygon_area(cell);
        if (area == 0) continue; // degenerate sliver
        RatPoint rep = detail::interior_point(cell);
        ShiftedCount sc = detail::count_shifted_rows(p, rep);
        // Interior points of cells avoid every level line, hence are clean.
        if (!sc.boundary_clean) fail(Errc::DegenerateArea, "cell representative hit a boundary");
        out.push_back(Cell{std::move(cell), sc.value, std::move(area)});
    }
    return out;
}

// Exact law of X_P by cell decomposition.
inline Pmf exact_pmf(const IntPolygon& p) {
    Pmf::Map m;
    Rat total(0);
    for (const auto& cell : decompose_unit_square(p)) {
        m[cell.value] += cell.probability;
        total += cell.probability;
    }
    if (total != 1) fail(Errc::DegenerateArea, "cell areas sum to " + rat_str(total));
    return Pmf::from_map(std::move(m));
}

// Closed form for integer triangles: with affine side lengths a, b, c and
// g = gcd(a,b,c), the law is the convolution U_{a/g} + U_{b/g} + U_{c/g} + U_2
// dilated by g and shifted so the mean equals the area. The shift is always
// an integer; a failure here signals a bug, not bad input.
inline Pmf triangle_pmf(const IntPolygon& t) {
    if (t.size() != 3) fail(Errc::MethodMismatch, "triangle law requires a triangle");
    const auto sides = t.sides();
    Int a = affine_length(sides[0]);
    Int b = affine_length(sides[1]);
    Int c = affine_length(sides[2]);
    Int g = boost::multiprecision::gcd(boost::multiprecision::gcd(a, b), c);

    Pmf law = Pmf::uniform(to_i64(a / g))
                  .convolve(Pmf::uniform(to_i64(b / g)))
                  .convolve(Pmf::uniform(to_i64(c / g)))
                  .convolve(Pmf::uniform(2))
                  .scaled_support(to_i64(g));
    Rat offset = t.area() - law.mean();
    if (denominator(offset) != 1) {
        fail(Errc::ShiftNotInteger, "triangle law shift " + rat_str(offset) + " is not an integer");
    }
    return law.shifted(to_i64(numerator(offset)));
}

} // namespace latshift
