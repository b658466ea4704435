#pragma once

// Cross covariogram g_{A,B}(x) = area(A intersect (B + x)) and its lattice
// sum. The sum over integer translates minus the integral (= area(A) *
// area(B)) reproduces the covariance of the two lattice counts exactly.

#include "latshift/clip.hpp"
#include "latshift/polygon.hpp"
#include "latshift/rational.hpp"
#include "latshift/vec.hpp"

#include <tuple>
#include <vector>

namespace latshift {

inline Rat covariogram_at(const IntPolygon& a, const IntPolygon& b, const RatPoint& x) {
    return polygon_area(intersect_convex(a, b, x));
}

struct CovariogramSum {
    Rat lattice_sum; // sum over n in Z^2 of g_{A,B}(n)
    Rat integral;    // area(A) * area(B)
    Rat covariance;  // lattice_sum - integral
};

struct CovariogramEntry {
    Int nx, ny;
    Rat value;
};

// Every translate with positive overlap lies in A + (-B); scanning that
// bounding box is complete, and the zero-area overscan contributes nothing.
inline std::vector<CovariogramEntry> covariogram_table(const IntPolygon& a, const IntPolygon& b) {
    Int axmin, axmax, aymin, aymax, bxmin, bxmax, bymin, bymax;
    a.bounding_box(axmin, axmax, aymin, aymax);
    b.bounding_box(bxmin, bxmax, bymin, bymax);
    std::vector<CovariogramEntry> out;
    for (Int nx = axmin - bxmax; nx <= axmax - bxmin; ++nx) {
        for (Int ny = aymin - bymax; ny <= aymax - bymin; ++ny) {
            Rat g = covariogram_at(a, b, RatPoint(Rat(nx), Rat(ny)));
            if (g > 0) out.push_back({nx, ny, std::move(g)});
        }
    }
    return out;
}

inline CovariogramSum lattice_sum(const IntPolygon& a, const IntPolygon& b) {
    CovariogramSum s{Rat(0), a.area() * b.area(), Rat(0)};
    for (const auto& e : covariogram_table(a, b)) s.lattice_sum += e.value;
    s.covariance = s.lattice_sum - s.integral;
    return s;
}

} // namespace latshift
