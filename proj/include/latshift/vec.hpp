#pragma once

// Integer vectors / rational points in the plane, wedge products, affine
// lengths, and 2x2 integer matrices.

#include "latshift/rational.hpp"

#include <utility>

namespace latshift {

struct IntVec {
    Int x{};
    Int y{};

    IntVec() = default;
    IntVec(Int px, Int py) : x(std::move(px)), y(std::move(py)) {}
    IntVec(long px, long py) : x(px), y(py) {}

    bool is_zero() const { return x == 0 && y == 0; }

    IntVec operator+(const IntVec& o) const { return {x + o.x, y + o.y}; }
    IntVec operator-(const IntVec& o) const { return {x - o.x, y - o.y}; }
    IntVec operator-() const { return {-x, -y}; }
    IntVec operator*(const Int& k) const { return {x * k, y * k}; }

    bool operator==(const IntVec& o) const { return x == o.x && y == o.y; }
    bool operator!=(const IntVec& o) const { return !(*this == o); }
    // Lexicographic; used for canonical vertex rotation and map keys.
    bool operator<(const IntVec& o) const {
        if (x != o.x) return x < o.x;
        return y < o.y;
    }
};

struct RatPoint {
    Rat x{};
    Rat y{};

    RatPoint() = default;
    RatPoint(Rat px, Rat py) : x(std::move(px)), y(std::move(py)) {}
    explicit RatPoint(const IntVec& v) : x(v.x), y(v.y) {}

    RatPoint operator+(const RatPoint& o) const { return {x + o.x, y + o.y}; }
    RatPoint operator-(const RatPoint& o) const { return {x - o.x, y - o.y}; }
    bool operator==(const RatPoint& o) const { return x == o.x && y == o.y; }
    bool operator!=(const RatPoint& o) const { return !(*this == o); }
};

// Oriented area of the parallelogram spanned by a and b.
inline Int wedge(const IntVec& a, const IntVec& b) {
    return a.x * b.y - b.x * a.y;
}

inline Rat wedge(const RatPoint& a, const IntVec& b) {
    return Rat(a.x) * b.y - Rat(b.x) * a.y;
}

inline Rat wedge(const RatPoint& a, const RatPoint& b) {
    return a.x * b.y - b.x * a.y;
}

inline Int dot(const IntVec& a, const IntVec& b) {
    return a.x * b.x + a.y * b.y;
}

// Number of lattice segments on the segment 0 -> v, i.e. gcd(|x|, |y|).
inline Int affine_length(const IntVec& v) {
    if (v.is_zero()) fail(Errc::ZeroVector, "affine length of (0,0)");
    return boost::multiprecision::gcd(abs(v.x), abs(v.y));
}

inline IntVec primitive_direction(const IntVec& v) {
    Int l = affine_length(v);
    return {v.x / l, v.y / l};
}

// Canonical representative of {v, -v}: y > 0, or y == 0 and x > 0.
inline IntVec canonical_sign(const IntVec& v) {
    if (v.y > 0 || (v.y == 0 && v.x > 0)) return v;
    return -v;
}

struct Mat2 {
    Int a{1}, b{0}; // row 1
    Int c{0}, d{1}; // row 2

    Int det() const { return a * d - b * c; }
    bool is_unimodular() const { return det() == 1 || det() == -1; }

    IntVec apply(const IntVec& v) const { return {a * v.x + b * v.y, c * v.x + d * v.y}; }
    Mat2 transpose() const { return {a, c, b, d}; }
    Mat2 operator*(const Mat2& o) const {
        return {a * o.a + b * o.c, a * o.b + b * o.d,
                c * o.a + d * o.c, c * o.b + d * o.d};
    }

    static Mat2 identity() { return {}; }
    static Mat2 shear_x(const Int& k) { return {1, k, 0, 1}; }
    static Mat2 shear_y(const Int& k) { return {1, 0, k, 1}; }
};

} // namespace latshift
