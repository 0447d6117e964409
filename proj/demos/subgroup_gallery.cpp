// Walks the subgroup lattice of a few small spaces and prints the covers each
// subgroup classifies.

#include <iostream>

#include "covspace/cover.hpp"
#include "covspace/spaces.hpp"
#include "covspace/textio.hpp"

using namespace covspace;

static void gallery(const std::string& name, const TwoComplex& x, int max_index) {
    Pi1Presentation p = fundamental_group_presentation(x);
    std::cout << name << ": pi1 = " << serialize_presentation(p.group) << "\n";
    for (const CosetTable& t : low_index_subgroups(p.group, max_index)) {
        CoveringMap cov = build_cover(x, t);
        std::cout << "  index " << t.coset_count << ": total has "
                  << cov.total.vertex_count << " vertices, " << cov.total.edges.size()
                  << " edges, " << cov.total.faces.size() << " faces; deck group order "
                  << deck_group_order(cov) << "\n";
    }
}

int main() {
    gallery("circle", circle(), 5);
    gallery("torus", torus(), 3);
    gallery("Klein bottle", klein_bottle(), 3);
    gallery("hypercubical manifold", hypercubical_manifold(), 8);
    return 0;
}
