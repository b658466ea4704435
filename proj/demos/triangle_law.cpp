// The triangle law two ways: geometric cell decomposition against the
// shifted convolution of uniform variables, for a few small triangles.

#include "latshift/latshift.hpp"

#include <iostream>

using namespace latshift;

int main() {
    const std::vector<std::vector<IntVec>> triangles = {
        {IntVec(0, 0), IntVec(1, 0), IntVec(0, 1)},
        {IntVec(0, 0), IntVec(2, 0), IntVec(0, 1)},
        {IntVec(0, 0), IntVec(3, 0), IntVec(0, 3)},
        {IntVec(0, 0), IntVec(4, 1), IntVec(1, 3)},
    };
    for (const auto& verts : triangles) {
        auto t = IntPolygon::validate(verts);
        auto geometric = exact_pmf(t);
        auto convolution = triangle_pmf(t);
        std::cout << "triangle";
        for (const auto& v : t.vertices()) std::cout << " (" << v.x << "," << v.y << ")";
        std::cout << "\n  laws " << (geometric == convolution ? "agree" : "DISAGREE") << ":";
        for (const auto& [value, prob] : geometric.entries()) {
            std::cout << "  " << value << ":" << rat_str(prob);
        }
        std::cout << "\n";
    }
    return 0;
}
