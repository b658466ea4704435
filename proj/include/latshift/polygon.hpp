#pragma once

// Validated convex integer polygons: construction, Pick counts, side
// profiles, group actions and Minkowski sums. All polygons are stored
// counterclockwise with the lexicographically smallest vertex first, so
// equality of values is plain equality of vertex lists.

#include "latshift/rational.hpp"
#include "latshift/vec.hpp"

#include <algorithm>
#include <cstddef>
#include <map>
#include <vector>

namespace latshift {

// Multiset of (primitive direction, affine length) pairs describing a
// convex boundary. Entries are keyed by direction; directions are pairwise
// distinct and lengths positive.
class SideProfile {
public:
    SideProfile() = default;

    void add(const IntVec& dir, const Int& len) {
        if (len <= 0) return;
        auto it = entries_.find(dir);
        if (it == entries_.end()) {
            entries_.emplace(dir, len);
        } else {
            it->second += len;
            if (it->second == 0) entries_.erase(it);
        }
    }

    // Ref-qualified so calls on temporaries get an owned copy.
    const std::map<IntVec, Int>& entries() const& { return entries_; }
    std::map<IntVec, Int> entries() && { return std::move(entries_); }

    Int total_length() const {
        Int t = 0;
        for (const auto& [d, l] : entries_) t += l;
        return t;
    }

    IntVec vector_sum() const {
        IntVec s{0, 0};
        for (const auto& [d, l] : entries_) s = s + d * l;
        return s;
    }

    // Centrally symmetric profile: every direction pairs with its negation
    // at equal length.
    bool centrally_symmetric() const {
        for (const auto& [d, l] : entries_) {
            auto it = entries_.find(-d);
            if (it == entries_.end() || it->second != l) return false;
        }
        return true;
    }

    SideProfile negated() const {
        SideProfile out;
        for (const auto& [d, l] : entries_) out.add(-d, l);
        return out;
    }

    SideProfile transformed(const Mat2& m) const {
        SideProfile out;
        for (const auto& [d, l] : entries_) out.add(m.apply(d), l);
        return out;
    }

    SideProfile merged(const SideProfile& other) const {
        SideProfile out = *this;
        for (const auto& [d, l] : other.entries_) out.add(d, l);
        return out;
    }

    bool operator==(const SideProfile& o) const { return entries_ == o.entries_; }

private:
    std::map<IntVec, Int> entries_;
};

class IntPolygon {
public:
    // Validates and normalizes a vertex list: consecutive duplicates dropped,
    // collinear runs merged into one side (their lattice points stay counted
    // through the side's affine length), orientation checked. Clockwise input
    // is rejected unless allow_reverse is set.
    static IntPolygon validate(std::vector<IntVec> pts, bool allow_reverse = false) {
        if (pts.size() < 3) fail(Errc::TooFewVertices, "need at least 3 vertices");

        std::vector<IntVec> v;
        v.reserve(pts.size());
        for (const auto& p : pts) {
            if (v.empty() || v.back() != p) v.push_back(p);
        }
        while (v.size() > 1 && v.front() == v.back()) v.pop_back();
        if (v.size() < 3) fail(Errc::DegenerateArea, "fewer than 3 distinct vertices");

        Int twice_area = 0;
        for (std::size_t i = 0; i < v.size(); ++i) {
            const IntVec& p = v[i];
            const IntVec& q = v[(i + 1) % v.size()];
            twice_area += wedge(p, q);
        }
        if (twice_area == 0) fail(Errc::DegenerateArea, "zero area");
        if (twice_area < 0) {
            if (!allow_reverse) fail(Errc::NotConvex, "clockwise orientation (pass allow_reverse to accept)");
            std::reverse(v.begin(), v.end());
            twice_area = -twice_area;
        }

        // Merge collinear runs; a cross product of zero with opposed edge
        // directions means the boundary retraces itself.
        bool merged = true;
        while (merged && v.size() >= 3) {
            merged = false;
            for (std::size_t i = 0; i < v.size(); ++i) {
                std::size_t n = v.size();
                IntVec e_in = v[i] - v[(i + n - 1) % n];
                IntVec e_out = v[(i + 1) % n] - v[i];
                if (wedge(e_in, e_out) == 0) {
                    if (dot(e_in, e_out) <= 0) fail(Errc::NotConvex, "boundary retraces itself");
                    v.erase(v.begin() + static_cast<std::ptrdiff_t>(i));
                    merged = true;
                    break;
                }
            }
        }
        if (v.size() < 3) fail(Errc::DegenerateArea, "degenerate after merging collinear vertices");

        for (std::size_t i = 0; i < v.size(); ++i) {
            std::size_t n = v.size();
            IntVec e_in = v[i] - v[(i + n - 1) % n];
            IntVec e_out = v[(i + 1) % n] - v[i];
            if (wedge(e_in, e_out) <= 0) fail(Errc::NotConvex, "non-convex vertex");
        }

        std::size_t lo = 0;
        for (std::size_t i = 1; i < v.size(); ++i) {
            if (v[i] < v[lo]) lo = i;
        }
        std::rotate(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(lo), v.end());

        return IntPolygon(std::move(v), std::move(twice_area));
    }

    const std::vector<IntVec>& vertices() const& { return verts_; }
    std::vector<IntVec> vertices() && { return std::move(verts_); }
    std::size_t size() const { return verts_.size(); }

    std::vector<IntVec> sides() const {
        std::vector<IntVec> s;
        s.reserve(verts_.size());
        for (std::size_t i = 0; i < verts_.size(); ++i) {
            s.push_back(verts_[(i + 1) % verts_.size()] - verts_[i]);
        }
        return s;
    }

    Rat area() const { return Rat(twice_area_, 2); }

    SideProfile side_profile() const {
        SideProfile prof;
        for (const auto& s : sides()) prof.add(primitive_direction(s), affine_length(s));
        return prof;
    }

    // Boundary lattice points == affine perimeter.
    Int boundary_count() const {
        Int b = 0;
        for (const auto& s : sides()) b += affine_length(s);
        return b;
    }

    // Interior lattice points from Pick's relation area = i + b/2 - 1.
    Int interior_count() const {
        Rat i = area() - Rat(boundary_count(), 2) + 1;
        if (denominator(i) != 1 || i < 0) fail(Errc::DegenerateArea, "Pick count not a nonnegative integer");
        return numerator(i);
    }

    enum class Position { Inside, Boundary, Outside };

    Position classify(const RatPoint& p) const {
        bool boundary = false;
        for (std::size_t i = 0; i < verts_.size(); ++i) {
            const IntVec side = verts_[(i + 1) % verts_.size()] - verts_[i];
            Rat w = wedge(p - RatPoint(verts_[i]), side);
            // ccw orientation: inside points see every side on their right
            // half-plane boundary, i.e. wedge(p - a, side) <= 0.
            if (w > 0) return Position::Outside;
            if (w == 0) boundary = true;
        }
        return boundary ? Position::Boundary : Position::Inside;
    }

    IntPolygon translated(const IntVec& t) const {
        std::vector<IntVec> v = verts_;
        for (auto& p : v) p = p + t;
        return IntPolygon(std::move(v), Int(twice_area_));
    }

    // Point reflection through the origin preserves orientation.
    IntPolygon negated() const {
        std::vector<IntVec> v;
        v.reserve(verts_.size());
        for (const auto& p : verts_) v.push_back(-p);
        return validate(std::move(v));
    }

    void bounding_box(Int& xmin, Int& xmax, Int& ymin, Int& ymax) const {
        xmin = xmax = verts_[0].x;
        ymin = ymax = verts_[0].y;
        for (const auto& p : verts_) {
            xmin = std::min(xmin, p.x);
            xmax = std::max(xmax, p.x);
            ymin = std::min(ymin, p.y);
            ymax = std::max(ymax, p.y);
        }
    }

    bool operator==(const IntPolygon& o) const { return verts_ == o.verts_; }
    bool operator!=(const IntPolygon& o) const { return !(*this == o); }

private:
    IntPolygon(std::vector<IntVec> v, Int twice_area)
        : verts_(std::move(v)), twice_area_(std::move(twice_area)) {}

    std::vector<IntVec> verts_;
    Int twice_area_;
};

// Interior and boundary lattice counts with the area they tie together
// through area = interior + boundary/2 - 1.
struct PickCounts {
    Int interior;
    Int boundary;
    Rat area;
};

inline PickCounts pick_counts(const IntPolygon& p) {
    return {p.interior_count(), p.boundary_count(), p.area()};
}

// det A = +1 applies the lattice symmetry directly; det A = -1 composes it
// with a reflection, and the image is re-normalized to ccw.
inline IntPolygon apply_unimodular(const Mat2& m, const IntPolygon& p) {
    if (!m.is_unimodular()) fail(Errc::NotUnimodular, "matrix determinant is not +-1");
    std::vector<IntVec> v;
    v.reserve(p.size());
    for (const auto& q : p.vertices()) v.push_back(m.apply(q));
    return IntPolygon::validate(std::move(v), /*allow_reverse=*/true);
}

// Andrew monotone chain; returns ccw hull without collinear vertices.
inline std::vector<IntVec> convex_hull(std::vector<IntVec> pts) {
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    if (pts.size() < 3) return pts;
    std::vector<IntVec> h(2 * pts.size());
    std::size_t k = 0;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        while (k >= 2 && wedge(h[k - 1] - h[k - 2], pts[i] - h[k - 2]) <= 0) --k;
        h[k++] = pts[i];
    }
    for (std::size_t i = pts.size() - 1, t = k + 1; i-- > 0;) {
        while (k >= t && wedge(h[k - 1] - h[k - 2], pts[i] - h[k - 2]) <= 0) --k;
        h[k++] = pts[i];
    }
    h.resize(k - 1);
    return h;
}

// Convex Minkowski sum by the edge-merge rule: the sides of P + Q are the
// union of the sides of P and Q sorted by direction angle. The chain starts
// at the sum of the bottommost-then-leftmost vertices, whose outgoing edge
// carries the smallest angle in [0, 2pi).
inline IntPolygon minkowski_sum(const IntPolygon& p, const IntPolygon& q) {
    auto bottom_left = [](const IntPolygon& poly) {
        IntVec best = poly.vertices()[0];
        for (const auto& v : poly.vertices()) {
            if (v.y < best.y || (v.y == best.y && v.x < best.x)) best = v;
        }
        return best;
    };
    // Angle order over [0, 2pi) measured from the positive x axis.
    auto angle_less = [](const IntVec& a, const IntVec& b) {
        auto half = [](const IntVec& v) { return (v.y > 0 || (v.y == 0 && v.x > 0)) ? 0 : 1; };
        int ha = half(a), hb = half(b);
        if (ha != hb) return ha < hb;
        return wedge(a, b) > 0;
    };

    std::vector<IntVec> edges;
    for (const auto& e : p.sides()) edges.push_back(e);
    for (const auto& e : q.sides()) edges.push_back(e);
    std::stable_sort(edges.begin(), edges.end(), angle_less);

    std::vector<IntVec> verts;
    verts.push_back(bottom_left(p) + bottom_left(q));
    for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
        verts.push_back(verts.back() + edges[i]);
    }
    return IntPolygon::validate(std::move(verts));
}

inline IntPolygon negate(const IntPolygon& p) { return p.negated(); }

// Direct bounding-box enumeration of lattice points by position; the
// independent cross-check for the Pick-derived counts.
struct LatticeCensus {
    Int interior{0};
    Int boundary{0};
};

inline LatticeCensus lattice_census(const IntPolygon& p) {
    Int xmin, xmax, ymin, ymax;
    p.bounding_box(xmin, xmax, ymin, ymax);
    LatticeCensus c;
    for (Int x = xmin; x <= xmax; ++x) {
        for (Int y = ymin; y <= ymax; ++y) {
            switch (p.classify(RatPoint(Rat(x), Rat(y)))) {
            case IntPolygon::Position::Inside: ++c.interior; break;
            case IntPolygon::Position::Boundary: ++c.boundary; break;
            case IntPolygon::Position::Outside: break;
            }
        }
    }
    return c;
}

} // namespace latshift
