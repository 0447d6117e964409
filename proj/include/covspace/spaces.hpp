#pragma once

#include "covspace/complex.hpp"
#include "covspace/presentation.hpp"

namespace covspace {

// One vertex, one loop per generator, one polygonal face per relator.
inline TwoComplex presentation_complex(const Presentation& p) {
    TwoComplex x;
    x.vertex_count = 1;
    x.basepoint = 0;
    for (int g = 0; g < p.generator_count; ++g)
        x.edges.push_back({0, 0});
    for (const Word& r : p.relators) {
        std::vector<SignedEdge> bnd;
        for (const Letter& l : r.letters)
            bnd.push_back(SignedEdge{l.gen, l.inv});
        x.faces.push_back(std::move(bnd));
    }
    return x;
}

inline TwoComplex circle() {
    return presentation_complex(make_presentation(1, {}));
}

inline TwoComplex wedge_of_circles(int k) {
    return presentation_complex(make_presentation(k, {}));
}

// <a | a^n>: one vertex, one loop, one n-gon.
inline TwoComplex cyclic_group_complex(int n) {
    if (n < 1)
        throw input_error("cyclic group order must be positive");
    std::vector<int> rel(n, 1);
    return presentation_complex(make_presentation(1, {word_from_ints(rel, 1)}));
}

inline TwoComplex torus() {
    return presentation_complex(
        make_presentation(2, {word_from_ints({1, 2, -1, -2}, 2)}));
}

inline TwoComplex klein_bottle() {
    return presentation_complex(
        make_presentation(2, {word_from_ints({1, 2, 1, -2}, 2)}));
}

// Cube with opposite faces identified after a quarter turn: two vertex
// classes, four edge classes (all running a -> b), three square classes and
// the cube itself as the single 3-cell. Its fundamental group is the
// quaternion group of order 8.
inline TwoComplex hypercubical_manifold() {
    TwoComplex x;
    x.vertex_count = 2;
    x.basepoint = 0;
    x.cell3_count = 1;
    // w, x, y, z
    for (int e = 0; e < 4; ++e)
        x.edges.push_back({0, 1});
    x.faces = {
        {{2, false}, {1, true}, {3, false}, {0, true}},  // y x- z w-
        {{3, true}, {0, false}, {1, true}, {2, false}},  // z- w x- y
        {{0, false}, {2, true}, {3, false}, {1, true}},  // w y- z x-
    };
    return x;
}

// Dodecahedron with opposite faces identified after a twist (the minimal one
// matching vertices): five vertex classes, ten edge classes, six pentagon
// classes, one 3-cell. Its fundamental group is the binary icosahedral group
// of order 120 and its abelianization is trivial, so the space has the
// homology of the 3-sphere.
inline TwoComplex dodecahedral_space() {
    TwoComplex x;
    x.vertex_count = 5;
    x.basepoint = 0;
    x.cell3_count = 1;
    x.edges = {{0, 1}, {0, 4}, {0, 3}, {1, 2}, {1, 4},
               {2, 3}, {2, 0}, {3, 4}, {3, 1}, {4, 2}};
    x.faces = {
        {{0, false}, {3, false}, {5, false}, {7, false}, {1, true}},
        {{0, false}, {4, false}, {9, false}, {5, false}, {2, true}},
        {{3, false}, {6, false}, {2, false}, {7, false}, {4, true}},
        {{5, false}, {8, false}, {4, false}, {1, true}, {6, true}},
        {{7, false}, {9, false}, {6, false}, {0, false}, {8, true}},
        {{1, true}, {2, false}, {8, false}, {3, false}, {9, true}},
    };
    return x;
}

} // namespace covspace
