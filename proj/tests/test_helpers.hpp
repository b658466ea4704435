#pragma once

#include "latshift/latshift.hpp"

#include <initializer_list>
#include <utility>
#include <vector>

namespace lt = latshift;

inline lt::IntPolygon poly(std::initializer_list<std::pair<long, long>> pts) {
    std::vector<lt::IntVec> v;
    for (const auto& [x, y] : pts) v.emplace_back(x, y);
    return lt::IntPolygon::validate(v);
}

// the unit triangle (0,0),(1,0),(0,1)
inline lt::IntPolygon tri_unit() { return poly({{0, 0}, {1, 0}, {0, 1}}); }

inline lt::IntPolygon unit_square() { return poly({{0, 0}, {1, 0}, {1, 1}, {0, 1}}); }

// pentagon (0,0),(2,0),(2,1),(1,2),(0,1): area 3, variance 1/2
inline lt::IntPolygon pentagon() { return poly({{0, 0}, {2, 0}, {2, 1}, {1, 2}, {0, 1}}); }

inline lt::RatPoint rp(const char* x, const char* y) {
    return lt::RatPoint(lt::rat_parse(x), lt::rat_parse(y));
}

inline lt::Rat rat(const char* s) { return lt::rat_parse(s); }
