#pragma once

#include <string>
#include <utility>
#include <vector>

#include "covspace/complex.hpp"
#include "covspace/coset.hpp"
#include "covspace/errors.hpp"
#include "covspace/lowindex.hpp"

namespace covspace {

// A covering p : total -> base, built from a coset table over the fundamental
// group of the base. Total cells are ordered by (base cell index, coset), so
// cell (b, c) of each dimension has index b * coset_count + c. The total
// basepoint is the lift of the base basepoint at coset 0.
struct CoveringMap {
    TwoComplex base;
    TwoComplex total;
    CosetTable subgroup_table;
    std::vector<int> vertex_map; // total vertex -> base vertex
    std::vector<int> edge_map;   // total edge   -> base edge
    std::vector<int> face_map;   // total face   -> base face
    std::vector<std::pair<int, int>> vertex_lift_index; // total vertex -> (base vertex, coset)
    Pi1Presentation base_pi1;

    int sheets() const { return subgroup_table.coset_count; }
};

inline CoveringMap build_cover(const TwoComplex& x, const CosetTable& t) {
    require_valid(x);
    CoveringMap cov;
    cov.base = x;
    cov.base_pi1 = fundamental_group_presentation(x);
    if (int(cov.base_pi1.tree.discovery_order.size()) != x.vertex_count)
        throw input_error("cannot build a cover over a disconnected complex");
    if (t.presentation.generator_count != cov.base_pi1.group.generator_count)
        throw input_error("coset table alphabet does not match the fundamental group of the base");
    cov.subgroup_table = t;
    const int n = t.coset_count;

    cov.total.vertex_count = x.vertex_count * n;
    cov.total.cell3_count = x.cell3_count * n;
    cov.total.basepoint = x.basepoint * n;
    cov.vertex_map.resize(cov.total.vertex_count);
    cov.vertex_lift_index.resize(cov.total.vertex_count);
    for (int v = 0; v < x.vertex_count; ++v)
        for (int c = 0; c < n; ++c) {
            cov.vertex_map[v * n + c] = v;
            cov.vertex_lift_index[v * n + c] = {v, c};
        }

    // edge (e, c) starts at (src, c) and ends at (dst, c . label(e))
    for (std::size_t e = 0; e < x.edges.size(); ++e)
        for (int c = 0; c < n; ++c) {
            int d = trace_word(t, cov.base_pi1.edge_labels[e], c);
            cov.total.edges.push_back({x.edges[e].src * n + c, x.edges[e].dst * n + d});
            cov.edge_map.push_back(int(e));
        }

    // face (f, c) lifts the boundary starting over the boundary's tail vertex
    // at coset c; the rewritten boundary word is a relator, so it closes up
    for (std::size_t f = 0; f < x.faces.size(); ++f) {
        const auto& bnd = x.faces[f];
        for (int c = 0; c < n; ++c) {
            std::vector<SignedEdge> lifted;
            lifted.reserve(bnd.size());
            int cur = c;
            for (const SignedEdge& s : bnd) {
                const Word& lab = cov.base_pi1.edge_labels[s.edge];
                if (!s.reversed) {
                    lifted.push_back(SignedEdge{s.edge * n + cur, false});
                    cur = trace_word(t, lab, cur);
                } else {
                    int prev = trace_word(t, invert_word(lab), cur);
                    lifted.push_back(SignedEdge{s.edge * n + prev, true});
                    cur = prev;
                }
            }
            if (cur != c)
                throw input_error("face lift did not close; table is not over this base");
            cov.total.faces.push_back(std::move(lifted));
            cov.face_map.push_back(int(f));
        }
    }
    require_valid(cov.total);
    return cov;
}

inline std::vector<int> fiber_over(const CoveringMap& cov, int base_vertex) {
    if (base_vertex < 0 || base_vertex >= cov.base.vertex_count)
        throw input_error("base vertex out of range");
    std::vector<int> fiber;
    for (int tv = 0; tv < cov.total.vertex_count; ++tv)
        if (cov.vertex_map[tv] == base_vertex)
            fiber.push_back(tv);
    return fiber;
}

namespace detail {

// Walk a base edge path in the total complex starting from a given total
// vertex, using only the stored cell maps and incidences.
inline int lift_path(const CoveringMap& cov, int start_total_vertex,
                     const std::vector<SignedEdge>& base_path) {
    int at = start_total_vertex;
    for (const SignedEdge& s : base_path) {
        int next = -1;
        for (std::size_t te = 0; te < cov.total.edges.size(); ++te) {
            if (cov.edge_map[te] != s.edge) continue;
            if (!s.reversed && cov.total.edges[te].src == at) {
                next = cov.total.edges[te].dst;
                break;
            }
            if (s.reversed && cov.total.edges[te].dst == at) {
                next = cov.total.edges[te].src;
                break;
            }
        }
        if (next == -1)
            throw input_error("path does not lift; covering is malformed");
        at = next;
    }
    return at;
}

} // namespace detail

// The action of each fundamental group generator of the base on the basepoint
// fiber, read off by lifting the generator's loop through the total complex.
// For a cover built by build_cover this reproduces the subgroup table exactly.
inline CosetTable monodromy_action(const CoveringMap& cov) {
    const int n = cov.sheets();
    const int k = cov.base_pi1.group.generator_count;
    CosetTable t;
    t.presentation = cov.subgroup_table.presentation;
    t.coset_count = n;
    t.action.assign(std::size_t(n) * 2 * k, -1);

    // basepoint fiber indexed by coset
    std::vector<int> fiber(n, -1);
    for (int tv = 0; tv < cov.total.vertex_count; ++tv)
        if (cov.vertex_lift_index[tv].first == cov.base.basepoint)
            fiber[cov.vertex_lift_index[tv].second] = tv;

    for (int g = 0; g < k; ++g) {
        int e = cov.base_pi1.generator_edges[g];
        std::vector<SignedEdge> loop = tree_path(cov.base_pi1.tree, cov.base.edges[e].src);
        loop.push_back(SignedEdge{e, false});
        std::vector<SignedEdge> back = tree_path(cov.base_pi1.tree, cov.base.edges[e].dst);
        for (auto it = back.rbegin(); it != back.rend(); ++it)
            loop.push_back(it->flipped());
        for (int c = 0; c < n; ++c) {
            int end = detail::lift_path(cov, fiber[c], loop);
            int d = cov.vertex_lift_index[end].second;
            t.at(c, 2 * g) = d;
            t.at(d, 2 * g + 1) = c;
        }
    }
    validate_table(t);
    return t;
}

// Recover the subgroup of a connected cover: present the fundamental group of
// the total complex, project its generators to loops of the base, and
// enumerate the subgroup they generate.
inline CosetTable subgroup_of_cover(const CoveringMap& cov,
                                    int max_cosets = kDefaultMaxCosets) {
    Pi1Presentation total_pi1 = fundamental_group_presentation(cov.total);
    if (int(total_pi1.tree.discovery_order.size()) != cov.total.vertex_count)
        throw input_error("cover total space is not connected");
    const int k = cov.base_pi1.group.generator_count;

    // base word of the projected tree path from the total basepoint to each
    // total vertex
    std::vector<Word> path_word(cov.total.vertex_count, empty_word(k));
    for (int tv : total_pi1.tree.discovery_order) {
        if (!total_pi1.tree.parent[tv]) continue;
        auto [par, via] = *total_pi1.tree.parent[tv];
        const Word& lab = cov.base_pi1.edge_labels[cov.edge_map[via.edge]];
        path_word[tv] = concat_words(path_word[par], via.reversed ? invert_word(lab) : lab);
    }

    std::vector<Word> gens;
    for (int ge : total_pi1.generator_edges) {
        const auto& te = cov.total.edges[ge];
        const Word& lab = cov.base_pi1.edge_labels[cov.edge_map[ge]];
        Word w = concat_words(concat_words(path_word[te.src], lab),
                              invert_word(path_word[te.dst]));
        if (!w.empty())
            gens.push_back(std::move(w));
    }
    return todd_coxeter(cov.base_pi1.group, gens, max_cosets);
}

inline CoveringMap universal_cover(const TwoComplex& x,
                                   int max_cosets = kDefaultMaxCosets) {
    require_valid(x);
    Pi1Presentation pi1 = fundamental_group_presentation(x);
    if (int(pi1.tree.discovery_order.size()) != x.vertex_count)
        throw input_error("universal cover requires a connected complex");
    CosetTable t = todd_coxeter(pi1.group, {}, max_cosets);
    return build_cover(x, t);
}

// Number of deck transformations: cosets c such that sending coset 0 to c
// extends to an automorphism of the action, i.e. every generator of the
// subgroup fixes c. For the universal cover this is the full group order.
inline int deck_group_order(const CoveringMap& cov) {
    const CosetTable& t = cov.subgroup_table;
    std::vector<Word> hgens =
        t.subgroup_words.empty() ? schreier_generators(t) : t.subgroup_words;
    int count = 0;
    for (int c = 0; c < t.coset_count; ++c) {
        bool fixed = true;
        for (const Word& h : hgens)
            if (trace_word(t, h, c) != c) {
                fixed = false;
                break;
            }
        if (fixed) ++count;
    }
    return count;
}

// Both composites of the correspondence, checked on every subgroup up to the
// given index: subgroup -> cover -> subgroup must return the same table, and
// cover -> action -> cover must rebuild the identical cover.
struct RoundTripReport {
    struct Entry {
        int subgroup_index = 0;
        int coset_count = 0;
        bool subgroup_roundtrip_ok = false;
        bool cover_roundtrip_ok = false;
    };
    std::vector<Entry> entries;

    bool all_passed() const {
        for (const auto& e : entries)
            if (!e.subgroup_roundtrip_ok || !e.cover_roundtrip_ok)
                return false;
        return true;
    }
};

inline bool covers_identical(const CoveringMap& a, const CoveringMap& b) {
    return a.base == b.base && a.total == b.total &&
           a.subgroup_table.same_action(b.subgroup_table) &&
           a.vertex_map == b.vertex_map && a.edge_map == b.edge_map &&
           a.face_map == b.face_map && a.vertex_lift_index == b.vertex_lift_index;
}

inline RoundTripReport galois_roundtrip_check(const TwoComplex& x, int max_index,
                                              int max_cosets = kDefaultMaxCosets) {
    require_valid(x);
    Pi1Presentation pi1 = fundamental_group_presentation(x);
    if (int(pi1.tree.discovery_order.size()) != x.vertex_count)
        throw input_error("round trip check requires a connected complex");
    RoundTripReport rep;
    std::vector<CosetTable> subs = low_index_subgroups(pi1.group, max_index);
    for (std::size_t i = 0; i < subs.size(); ++i) {
        CoveringMap cov = build_cover(x, subs[i]);
        RoundTripReport::Entry e;
        e.subgroup_index = int(i);
        e.coset_count = subs[i].coset_count;
        CosetTable back = standardize_table(subgroup_of_cover(cov, max_cosets));
        e.subgroup_roundtrip_ok = back.same_action(subs[i]);
        CosetTable mono = monodromy_action(cov);
        e.cover_roundtrip_ok =
            mono.same_action(cov.subgroup_table) && covers_identical(build_cover(x, mono), cov);
        rep.entries.push_back(e);
    }
    return rep;
}

} // namespace covspace
