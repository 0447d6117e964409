// The dodecahedral space: a closed 3-manifold whose fundamental group is the
// binary icosahedral group. Its first homology vanishes even though the group
// has order 120, and its universal cover is a simply connected 120-sheet
// complex.

#include <iostream>

#include "covspace/cover.hpp"
#include "covspace/spaces.hpp"
#include "covspace/textio.hpp"

using namespace covspace;

int main() {
    TwoComplex d = dodecahedral_space();
    std::cout << "cells: " << d.vertex_count << " vertices, " << d.edges.size()
              << " edges, " << d.faces.size() << " faces, " << d.cell3_count
              << " 3-cell; euler characteristic " << euler_characteristic(d) << "\n";

    Pi1Presentation p = fundamental_group_presentation(d);
    std::cout << "pi1 = " << serialize_presentation(p.group) << "\n";
    std::cout << "order: " << todd_coxeter(p.group, {}).coset_count << "\n";

    AbelianInvariants h1 = abelianization_invariants(p.group);
    std::cout << "H1 invariant factors:";
    for (long long f : h1.invariant_factors)
        std::cout << " " << f;
    std::cout << (h1.invariant_factors.empty() ? " none" : "")
              << ", free rank " << h1.free_rank << "\n";

    // the same group, presented directly
    Presentation ico = parse_presentation_text("<r s t | r^2TSR, s^3TSR, t^5TSR>");
    std::cout << "presentation <r s t | r^2=s^3=t^5=rst> has order "
              << todd_coxeter(ico, {}).coset_count << "\n";

    CoveringMap uc = universal_cover(d);
    std::cout << "universal cover: " << uc.total.vertex_count << " vertices, "
              << uc.total.edges.size() << " edges, " << uc.total.faces.size()
              << " faces over " << uc.sheets() << " sheets\n";
    std::cout << "deck group order: " << deck_group_order(uc) << "\n";
    std::cout << "pi1 of the cover is trivial: "
              << (standardize_table(subgroup_of_cover(uc)).coset_count == uc.sheets()
                      ? "yes"
                      : "no")
              << "\n";
    return 0;
}
