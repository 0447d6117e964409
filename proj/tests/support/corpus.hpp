#pragma once

// The standard test corpus: small pointed complexes with known coverings.

#include <string>
#include <utility>
#include <vector>

#include "covspace/spaces.hpp"

namespace corpus {

struct Space {
    std::string name;
    covspace::TwoComplex complex;
    long long pi1_order; // 0 = infinite
};

inline std::vector<Space> spaces() {
    std::vector<Space> out;
    out.push_back({"circle", covspace::circle(), 0});
    out.push_back({"wedge2", covspace::wedge_of_circles(2), 0});
    out.push_back({"torus", covspace::torus(), 0});
    out.push_back({"klein", covspace::klein_bottle(), 0});
    for (int n = 1; n <= 8; ++n)
        out.push_back({"Z" + std::to_string(n), covspace::cyclic_group_complex(n), n});
    out.push_back({"hypercubical", covspace::hypercubical_manifold(), 8});
    return out;
}

} // namespace corpus
