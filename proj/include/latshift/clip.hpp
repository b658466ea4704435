#pragma once

// Exact convex clipping in rational coordinates. Polygons here are plain
// ccw vertex lists; degenerate results (point, segment, empty) are legal
// values with zero area, because covariogram sums iterate over many
// non-overlapping translates.

#include "latshift/polygon.hpp"
#include "latshift/rational.hpp"
#include "latshift/vec.hpp"

#include <cstddef>
#include <utility>
#include <vector>

namespace latshift {

using RatPolygon = std::vector<RatPoint>;

inline RatPolygon to_rat_polygon(const IntPolygon& p, const RatPoint& shift = RatPoint()) {
    RatPolygon out;
    out.reserve(p.size());
    for (const auto& v : p.vertices()) out.push_back(RatPoint(v) + shift);
    return out;
}

inline Rat polygon_area(const RatPolygon& p) {
    if (p.size() < 3) return Rat(0);
    Rat twice(0);
    for (std::size_t i = 0; i < p.size(); ++i) {
        const RatPoint& a = p[i];
        const RatPoint& b = p[(i + 1) % p.size()];
        twice += a.x * b.y - b.x * a.y;
    }
    return twice / 2;
}

namespace detail {

inline void push_unique(RatPolygon& poly, const RatPoint& p) {
    if (poly.empty() || poly.back() != p) poly.push_back(p);
}

} // namespace detail

// Keeps the closed side a*x + b*y <= c (Sutherland-Hodgman step).
inline RatPolygon clip_halfplane(const RatPolygon& poly, const Rat& a, const Rat& b, const Rat& c) {
    if (poly.empty()) return {};
    RatPolygon out;
    out.reserve(poly.size() + 1);
    const std::size_t n = poly.size();
    std::vector<Rat> s(n);
    for (std::size_t i = 0; i < n; ++i) s[i] = a * poly[i].x + b * poly[i].y - c;
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t j = (i + 1) % n;
        if (s[i] <= 0) detail::push_unique(out, poly[i]);
        if ((s[i] < 0 && s[j] > 0) || (s[i] > 0 && s[j] < 0)) {
            Rat t = s[i] / (s[i] - s[j]);
            detail::push_unique(out, RatPoint(poly[i].x + t * (poly[j].x - poly[i].x),
                                              poly[i].y + t * (poly[j].y - poly[i].y)));
        }
    }
    while (out.size() > 1 && out.front() == out.back()) out.pop_back();
    return out;
}

// Exact intersection of two convex polygons by successive half-plane clips
// against every side of the second argument.
inline RatPolygon intersect_convex(const RatPolygon& p, const RatPolygon& q) {
    if (p.empty() || q.size() < 3) return {};
    RatPolygon out = p;
    const std::size_t n = q.size();
    for (std::size_t i = 0; i < n && !out.empty(); ++i) {
        const RatPoint& a = q[i];
        const RatPoint& b = q[(i + 1) % n];
        // points on the polygon side of the ccw edge a -> b satisfy
        // cross(b-a, p-a) >= 0, i.e. (by-ay) x - (bx-ax) y <= (by-ay) ax - (bx-ax) ay
        Rat ca = b.y - a.y;
        Rat cb = a.x - b.x;
        out = clip_halfplane(out, ca, cb, ca * a.x + cb * a.y);
    }
    return out;
}

inline RatPolygon intersect_convex(const IntPolygon& p, const IntPolygon& q,
                                   const RatPoint& q_shift = RatPoint()) {
    return intersect_convex(to_rat_polygon(p), to_rat_polygon(q, q_shift));
}

} // namespace latshift
