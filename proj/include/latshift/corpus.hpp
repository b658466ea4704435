#pragma once

// Deterministic test corpora: random convex integer polygons (random point
// clouds + convex hull), random unimodular maps, random clean shifts, and a
// translation-deduplicated enumeration of small integer triangles.

#include "latshift/polygon.hpp"
#include "latshift/rational.hpp"
#include "latshift/rng.hpp"
#include "latshift/vec.hpp"

#include <cstdint>
#include <set>
#include <vector>

namespace latshift {

// Convex hull of 3..max_points random lattice points with coordinates in
// [lo, hi]; retries until non-degenerate. Deterministic in (seed, index).
inline IntPolygon random_convex_polygon(std::uint64_t seed, std::uint64_t index,
                                        long lo = -8, long hi = 8,
                                        unsigned max_points = 10) {
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo + 1);
    for (std::uint64_t round = 0;; ++round) {
        const std::uint64_t ctr0 = (index * 4096 + round) * 64;
        const std::uint64_t npts = 3 + bounded(seed, ctr0, max_points - 2);
        std::vector<IntVec> pts;
        for (std::uint64_t i = 0; i < npts; ++i) {
            long x = lo + static_cast<long>(bounded(seed, ctr0 + 2 * i + 1, span));
            long y = lo + static_cast<long>(bounded(seed, ctr0 + 2 * i + 2, span));
            pts.emplace_back(x, y);
        }
        auto hull = convex_hull(pts);
        if (hull.size() < 3) continue;
        return IntPolygon::validate(hull);
    }
}

inline std::vector<IntPolygon> random_corpus(std::uint64_t seed, std::size_t count,
                                             long lo = -8, long hi = 8) {
    std::vector<IntPolygon> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        out.push_back(random_convex_polygon(seed, i, lo, hi));
    }
    return out;
}

// Product of up to max_shears elementary shears with exponents in [-2, 2].
// A size predicate keeps transformed polygons at desk scale; callers pass a
// cap on the coordinate magnitude of the image polygon.
inline Mat2 random_unimodular(std::uint64_t seed, std::uint64_t index,
                              const IntPolygon& target, const Int& coord_cap,
                              unsigned max_shears = 5) {
    for (std::uint64_t round = 0;; ++round) {
        const std::uint64_t ctr0 = (index * 512 + round) * 16;
        Mat2 m = Mat2::identity();
        const std::uint64_t nshears = 1 + bounded(seed, ctr0, max_shears);
        for (std::uint64_t i = 0; i < nshears; ++i) {
            long k = static_cast<long>(bounded(seed, ctr0 + 2 * i + 1, 5)) - 2;
            bool horizontal = bounded(seed, ctr0 + 2 * i + 2, 2) == 0;
            m = (horizontal ? Mat2::shear_x(Int(k)) : Mat2::shear_y(Int(k))) * m;
        }
        if (m.det() != 1) continue; // shear products are always det 1; belt and braces
        Int worst = 0;
        for (const auto& v : target.vertices()) {
            IntVec w = m.apply(v);
            worst = std::max({worst, abs(w.x), abs(w.y)});
        }
        if (worst > coord_cap) continue;
        return m;
    }
}

// A clean dyadic shift for the polygon: no lattice point on the shifted
// boundary, and every side-direction wedge non-integral.
inline DyadicPoint random_clean_shift(const CountPlan& plan, std::uint64_t seed,
                                      std::uint64_t index) {
    for (std::uint32_t attempt = 0;; ++attempt) {
        DyadicPoint x = shift_at(seed, index, attempt);
        if (clean_shift(plan, x)) return x;
    }
}

// All integer triangles with affine perimeter <= per_max and a canonical
// translate whose vertices fit in the coordinate box, deduplicated up to
// lattice translation. Canonical form: lexicographically smallest vertex at
// the origin (IntPolygon normalization makes vertex lists comparable).
inline std::vector<IntPolygon> enumerate_triangles(long per_max, long box) {
    std::set<std::vector<IntVec>> seen;
    std::vector<IntPolygon> out;
    for (long bx = -box; bx <= box; ++bx) {
        for (long by = -box; by <= box; ++by) {
            const IntVec b(bx, by);
            if (b.is_zero()) continue;
            if (to_i64(affine_length(b)) >= per_max - 1) continue;
            for (long cx = -box; cx <= box; ++cx) {
                for (long cy = -box; cy <= box; ++cy) {
                    const IntVec c(cx, cy);
                    if (c.is_zero() || c == b) continue;
                    if (wedge(b, c) <= 0) continue; // ccw only
                    Int per = affine_length(b) + affine_length(c) + affine_length(c - b);
                    if (per > per_max) continue;
                    IntPolygon t = IntPolygon::validate({IntVec(0, 0), b, c});
                    // normalize translation: lexicographic min vertex to origin
                    IntVec base = t.vertices().front();
                    t = t.translated(-base);
                    if (seen.insert(t.vertices()).second) out.push_back(t);
                }
            }
        }
    }
    return out;
}

// Deterministic stratified pick: up to per_bucket triangles for each affine
// perimeter value, evenly spaced through each bucket.
inline std::vector<IntPolygon> stratified_triangles(long per_max, long box,
                                                    std::size_t per_bucket) {
    auto all = enumerate_triangles(per_max, box);
    std::vector<IntPolygon> out;
    for (long per = 3; per <= per_max; ++per) {
        std::vector<const IntPolygon*> bucket;
        for (const auto& t : all) {
            if (t.boundary_count() == per) bucket.push_back(&t);
        }
        if (bucket.empty()) continue;
        const std::size_t take = std::min(per_bucket, bucket.size());
        for (std::size_t i = 0; i < take; ++i) {
            out.push_back(*bucket[i * bucket.size() / take]);
        }
    }
    return out;
}

} // namespace latshift
