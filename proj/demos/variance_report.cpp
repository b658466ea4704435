// Minimal library walkthrough: build a polygon, print its exact law and the
// three covariance routes.

#include "latshift/latshift.hpp"

#include <iostream>

using namespace latshift;

int main() {
    auto pentagon = IntPolygon::validate(
        {IntVec(0, 0), IntVec(2, 0), IntVec(2, 1), IntVec(1, 2), IntVec(0, 1)});

    std::cout << "area        = " << rat_str(pentagon.area()) << "\n";
    std::cout << "interior    = " << pentagon.interior_count() << "\n";
    std::cout << "boundary    = " << pentagon.boundary_count() << "\n";
    std::cout << "variance    = " << rat_str(variance(pentagon)) << "\n\n";

    std::cout << "exact law of the shifted lattice count:\n";
    for (const auto& [value, prob] : exact_pmf(pentagon).entries()) {
        std::cout << "  P(X = " << value << ") = " << rat_str(prob) << "\n";
    }

    auto sum = lattice_sum(pentagon, pentagon);
    std::cout << "\ncovariogram route: " << rat_str(sum.covariance) << "\n";
    std::cout << "series route (R=200): " << covariance_series(pentagon, pentagon, 200)
              << "\n";
    return 0;
}
