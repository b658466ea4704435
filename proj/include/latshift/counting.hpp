#pragma once

// Pointwise evaluation of lattice counts at explicit rational shifts.
//
// Conventions. The oriented parallelogram count X_v(x) counts lattice points
// in the OPEN parallelogram spanned by the vectors x and v: with that choice
// the signed count equals |v|_aff * ceil(wedge(x, v/|v|_aff)) at every shift
// whose wedge with the primitive direction is not an integer ("clean"
// shifts). Shifted polygons P + x are closed; boundary_clean reports whether
// a lattice point landed exactly on the boundary.

#include "latshift/polygon.hpp"
#include "latshift/rational.hpp"
#include "latshift/vec.hpp"

#include <cstdint>
#include <vector>

namespace latshift {

struct ShiftedCount {
    std::int64_t value{0};
    bool boundary_clean{true};
};

// A shift of the unit square together with its cleanliness flag.
struct ShiftSample {
    RatPoint point;
    bool boundary_clean{true};
};

// Lattice points of the closed set P + x over the integer bounding box.
inline ShiftedCount count_shifted(const IntPolygon& p, const RatPoint& x) {
    Int xmin, xmax, ymin, ymax;
    p.bounding_box(xmin, xmax, ymin, ymax);
    Int mx0 = rat_ceil(Rat(xmin) + x.x), mx1 = rat_floor(Rat(xmax) + x.x);
    Int my0 = rat_ceil(Rat(ymin) + x.y), my1 = rat_floor(Rat(ymax) + x.y);
    ShiftedCount out;
    for (Int mx = mx0; mx <= mx1; ++mx) {
        for (Int my = my0; my <= my1; ++my) {
            RatPoint q(Rat(mx) - x.x, Rat(my) - x.y);
            switch (p.classify(q)) {
            case IntPolygon::Position::Inside:
                ++out.value;
                break;
            case IntPolygon::Position::Boundary:
                ++out.value;
                out.boundary_clean = false;
                break;
            case IntPolygon::Position::Outside:
                break;
            }
        }
    }
    return out;
}

inline ShiftSample probe_shift(const IntPolygon& p, const RatPoint& x) {
    return {x, count_shifted(p, x).boundary_clean};
}

// Oriented count over the open parallelogram spanned by x and v:
//   wedge(x,v) >= 0  ->  +(open count + |v|_aff)
//   wedge(x,v) <  0  ->  -(open count)
inline std::int64_t count_parallelogram_oriented(const IntVec& v, const RatPoint& x) {
    if (v.is_zero()) fail(Errc::ZeroVector, "parallelogram direction is (0,0)");
    const Int len = affine_length(v);
    const Rat w = wedge(x, v);
    if (w == 0) return to_i64(len); // degenerate open parallelogram, empty

    // Strict interior: m = s*x + t*v with s,t in (0,1). Solving via wedges,
    //   s = wedge(m,v)/wedge(x,v),  t = wedge(m,x)/wedge(v,x).
    Rat xs[4] = {Rat(0), x.x, Rat(v.x), x.x + v.x};
    Rat ys[4] = {Rat(0), x.y, Rat(v.y), x.y + v.y};
    Rat bx0 = xs[0], bx1 = xs[0], by0 = ys[0], by1 = ys[0];
    for (int i = 1; i < 4; ++i) {
        bx0 = std::min(bx0, xs[i]);
        bx1 = std::max(bx1, xs[i]);
        by0 = std::min(by0, ys[i]);
        by1 = std::max(by1, ys[i]);
    }
    const Rat neg_w = -w; // wedge(v, x)
    std::int64_t count = 0;
    for (Int mx = rat_ceil(bx0); mx <= rat_floor(bx1); ++mx) {
        for (Int my = rat_ceil(by0); my <= rat_floor(by1); ++my) {
            RatPoint m{Rat(mx), Rat(my)};
            Rat s_num = Rat(wedge(IntVec(mx, my), v)); // wedge(m, v), integer
            Rat t_num = wedge(m, x);
            bool s_ok = (w > 0) ? (s_num > 0 && s_num < w) : (s_num < 0 && s_num > w);
            bool t_ok = (neg_w > 0) ? (t_num > 0 && t_num < neg_w) : (t_num < 0 && t_num > neg_w);
            if (s_ok && t_ok) ++count;
        }
    }
    if (w > 0) return count + to_i64(len);
    return -count;
}

// Closed form of the same quantity: |v|_aff * ceil(wedge(x, v/|v|_aff)).
inline std::int64_t count_via_ceiling(const IntVec& v, const RatPoint& x) {
    if (v.is_zero()) fail(Errc::ZeroVector, "direction is (0,0)");
    const Int len = affine_length(v);
    const IntVec u = primitive_direction(v);
    return to_i64(len * rat_ceil(wedge(x, u)));
}

// Side decomposition of the shifted-polygon count. Summing the per-side
// ceiling terms (anchored at lattice vertices, so translation drops out)
// leaves a polygon constant; matching expectations against Pick's relation
// pins it to interior_count - 1. Equals count_shifted at every clean shift.
inline std::int64_t count_via_sides(const IntPolygon& p, const RatPoint& x) {
    Int total = p.interior_count() - 1;
    for (const auto& s : p.sides()) {
        const Int len = affine_length(s);
        total += len * rat_ceil(wedge(x, primitive_direction(s)));
    }
    return to_i64(total);
}

namespace detail {

// Row-sliced variant of count_shifted: exact x-interval per integer row.
// Same value and cleanliness flag, O(height * sides) instead of O(area).
inline ShiftedCount count_shifted_rows(const IntPolygon& p, const RatPoint& x) {
    const auto& verts = p.vertices();
    const std::size_t n = verts.size();
    Rat ymin = Rat(verts[0].y) + x.y, ymax = ymin;
    for (const auto& v : verts) {
        Rat y = Rat(v.y) + x.y;
        ymin = std::min(ymin, y);
        ymax = std::max(ymax, y);
    }
    ShiftedCount out;
    for (Int row = rat_ceil(ymin); row <= rat_floor(ymax); ++row) {
        const Rat y(row);
        bool have = false;
        Rat xlo, xhi;
        for (std::size_t i = 0; i < n; ++i) {
            RatPoint a(Rat(verts[i].x) + x.x, Rat(verts[i].y) + x.y);
            RatPoint b(Rat(verts[(i + 1) % n].x) + x.x, Rat(verts[(i + 1) % n].y) + x.y);
            if (a.y > b.y) std::swap(a, b);
            if (y < a.y || y > b.y) continue;
            if (a.y == b.y) {
                // horizontal edge on this row
                for (const Rat& xc : {a.x, b.x}) {
                    if (!have) { xlo = xhi = xc; have = true; }
                    else { xlo = std::min(xlo, xc); xhi = std::max(xhi, xc); }
                }
                continue;
            }
            Rat t = (y - a.y) / (b.y - a.y);
            Rat xc = a.x + t * (b.x - a.x);
            if (!have) { xlo = xhi = xc; have = true; }
            else { xlo = std::min(xlo, xc); xhi = std::max(xhi, xc); }
        }
        if (!have) continue;
        Int c0 = rat_ceil(xlo), c1 = rat_floor(xhi);
        if (c0 > c1) continue;
        out.value += to_i64(c1 - c0 + 1);
        const bool extreme_row = (y == ymin || y == ymax);
        if (extreme_row || denominator(xlo) == 1 || denominator(xhi) == 1) {
            out.boundary_clean = false;
        }
    }
    return out;
}

} // namespace detail

// ---------------------------------------------------------------------------
// Dyadic fast path. Monte Carlo shifts are exact rationals with denominator
// 2^64; all predicates below are exact in 128-bit integers.

struct DyadicPoint {
    std::uint64_t x{0};
    std::uint64_t y{0};

    RatPoint to_rat() const {
        Int den = Int(1) << 64;
        return RatPoint(Rat(Int(x), den), Rat(Int(y), den));
    }
};

// Small-integer view of a polygon for bulk counting. Construction checks
// that every coordinate fits well inside the 128-bit headroom.
struct CountPlan {
    struct Dir {
        std::int64_t ux, uy; // primitive direction
        std::int64_t len;    // affine length
    };
    struct Edge {
        std::int64_t ax, ay; // base vertex
        std::int64_t vx, vy; // side vector
    };

    std::vector<Dir> dirs;
    std::vector<Edge> edges;
    std::int64_t base{0}; // interior_count - 1
    std::int64_t xmin{0}, xmax{0}, ymin{0}, ymax{0};

    static CountPlan make(const IntPolygon& p) {
        constexpr std::int64_t kCoordLimit = std::int64_t(1) << 24;
        CountPlan plan;
        plan.base = to_i64(p.interior_count() - 1);
        const auto& verts = p.vertices();
        const auto sides = p.sides();
        for (std::size_t i = 0; i < verts.size(); ++i) {
            Edge e{to_i64(verts[i].x), to_i64(verts[i].y),
                   to_i64(sides[i].x), to_i64(sides[i].y)};
            if (std::abs(e.ax) > kCoordLimit || std::abs(e.ay) > kCoordLimit ||
                std::abs(e.vx) > kCoordLimit || std::abs(e.vy) > kCoordLimit) {
                fail(Errc::DegenerateArea, "polygon too large for the dyadic fast path");
            }
            plan.edges.push_back(e);
            IntVec u = primitive_direction(sides[i]);
            plan.dirs.push_back({to_i64(u.x), to_i64(u.y), to_i64(affine_length(sides[i]))});
        }
        Int a, b, c, d;
        p.bounding_box(a, b, c, d);
        plan.xmin = to_i64(a);
        plan.xmax = to_i64(b);
        plan.ymin = to_i64(c);
        plan.ymax = to_i64(d);
        return plan;
    }
};

namespace detail {

// wedge(x, u) * 2^64 for a dyadic shift; exact in 128 bits.
inline __int128 dyadic_wedge_num(const DyadicPoint& x, std::int64_t ux, std::int64_t uy) {
    return static_cast<__int128>(x.x) * uy - static_cast<__int128>(x.y) * ux;
}

inline std::int64_t ceil_shift64(__int128 num) {
    const __int128 mask = (static_cast<__int128>(1) << 64) - 1;
    return static_cast<std::int64_t>((num + mask) >> 64);
}

} // namespace detail

// A shift is clean iff wedge(x, u) is non-integral for every side direction;
// every lattice point on a shifted side or parallelogram boundary would force
// one of these wedges to an integer.
inline bool clean_shift(const CountPlan& plan, const DyadicPoint& x) {
    for (const auto& d : plan.dirs) {
        __int128 num = detail::dyadic_wedge_num(x, d.ux, d.uy);
        if (static_cast<std::uint64_t>(num) == 0) return false;
    }
    return true;
}

inline std::int64_t count_via_sides(const CountPlan& plan, const DyadicPoint& x) {
    std::int64_t total = plan.base;
    for (const auto& d : plan.dirs) {
        total += d.len * detail::ceil_shift64(detail::dyadic_wedge_num(x, d.ux, d.uy));
    }
    return total;
}

inline ShiftedCount count_shifted(const CountPlan& plan, const DyadicPoint& x) {
    ShiftedCount out;
    // m in P + x  <=>  wedge((m - a) - x, v) <= 0 for every edge (a, v).
    for (std::int64_t mx = plan.xmin; mx <= plan.xmax + 1; ++mx) {
        for (std::int64_t my = plan.ymin; my <= plan.ymax + 1; ++my) {
            bool inside = true, boundary = false;
            for (const auto& e : plan.edges) {
                __int128 w = (static_cast<__int128>(mx - e.ax) * e.vy -
                              static_cast<__int128>(my - e.ay) * e.vx)
                             << 64;
                w -= static_cast<__int128>(x.x) * e.vy - static_cast<__int128>(x.y) * e.vx;
                if (w > 0) { inside = false; break; }
                if (w == 0) boundary = true;
            }
            if (!inside) continue;
            ++out.value;
            if (boundary) out.boundary_clean = false;
        }
    }
    return out;
}

} // namespace latshift
