#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "covspace/errors.hpp"
#include "covspace/presentation.hpp"
#include "covspace/word.hpp"

namespace covspace {

// An edge traversal: forward runs src -> dst, reversed runs dst -> src.
struct SignedEdge {
    int edge = 0;
    bool reversed = false;

    SignedEdge flipped() const { return SignedEdge{edge, !reversed}; }
    auto operator<=>(const SignedEdge&) const = default;
};

// Pointed combinatorial 2-complex. Faces are polygons given by closed edge
// paths; 3-cells carry no attaching data and only enter the Euler
// characteristic.
struct TwoComplex {
    struct Edge {
        int src = 0;
        int dst = 0;
        auto operator<=>(const Edge&) const = default;
    };

    int vertex_count = 0;
    std::vector<Edge> edges;
    std::vector<std::vector<SignedEdge>> faces;
    int cell3_count = 0;
    int basepoint = 0;

    int edge_tail(const SignedEdge& s) const {
        return s.reversed ? edges[s.edge].dst : edges[s.edge].src;
    }
    int edge_head(const SignedEdge& s) const {
        return s.reversed ? edges[s.edge].src : edges[s.edge].dst;
    }

    auto operator<=>(const TwoComplex&) const = default;
};

struct ValidationReport {
    std::vector<std::string> errors;
    bool ok() const { return errors.empty(); }
};

inline ValidationReport validate_complex(const TwoComplex& x) {
    ValidationReport rep;
    auto err = [&](std::string m) { rep.errors.push_back(std::move(m)); };
    if (x.vertex_count <= 0)
        err("complex must have at least one vertex");
    if (x.cell3_count < 0)
        err("negative 3-cell count");
    if (x.basepoint < 0 || x.basepoint >= x.vertex_count)
        err("basepoint " + std::to_string(x.basepoint) + " out of range");
    for (std::size_t e = 0; e < x.edges.size(); ++e) {
        if (x.edges[e].src < 0 || x.edges[e].src >= x.vertex_count)
            err("edge " + std::to_string(e) + " source out of range");
        if (x.edges[e].dst < 0 || x.edges[e].dst >= x.vertex_count)
            err("edge " + std::to_string(e) + " endpoint out of range");
    }
    for (std::size_t f = 0; f < x.faces.size(); ++f) {
        const auto& bnd = x.faces[f];
        if (bnd.empty()) {
            err("face " + std::to_string(f) + " has empty boundary");
            continue;
        }
        bool in_range = true;
        for (const SignedEdge& s : bnd)
            if (s.edge < 0 || s.edge >= int(x.edges.size())) {
                err("face " + std::to_string(f) + " references edge " +
                    std::to_string(s.edge) + " out of range");
                in_range = false;
            }
        if (!in_range) continue;
        for (std::size_t i = 0; i < bnd.size(); ++i) {
            const SignedEdge& cur = bnd[i];
            const SignedEdge& nxt = bnd[(i + 1) % bnd.size()];
            if (x.edge_head(cur) != x.edge_tail(nxt)) {
                err("face " + std::to_string(f) + " not closed at position " +
                    std::to_string(i));
                break;
            }
        }
    }
    return rep;
}

inline void require_valid(const TwoComplex& x) {
    ValidationReport rep = validate_complex(x);
    if (!rep.ok())
        throw input_error("invalid complex: " + rep.errors.front());
}

inline int euler_characteristic(const TwoComplex& x) {
    return x.vertex_count - int(x.edges.size()) + int(x.faces.size()) - x.cell3_count;
}

// Breadth-first spanning tree of the basepoint component: vertices discovered
// in queue order, edges scanned in index order, forward before reverse.
struct SpanningTree {
    std::set<int> tree_edges;
    // parent[v]: the tree step leading back toward the basepoint; the stored
    // SignedEdge is oriented from parent to v. Unset for the basepoint and
    // for vertices outside its component.
    std::vector<std::optional<std::pair<int, SignedEdge>>> parent;
    std::vector<int> discovery_order; // component vertices, basepoint first
};

inline SpanningTree spanning_tree(const TwoComplex& x) {
    SpanningTree t;
    t.parent.resize(x.vertex_count);
    std::vector<char> seen(x.vertex_count, 0);
    seen[x.basepoint] = 1;
    t.discovery_order.push_back(x.basepoint);
    for (std::size_t i = 0; i < t.discovery_order.size(); ++i) {
        int v = t.discovery_order[i];
        for (std::size_t e = 0; e < x.edges.size(); ++e) {
            if (x.edges[e].src == v && !seen[x.edges[e].dst]) {
                seen[x.edges[e].dst] = 1;
                t.tree_edges.insert(int(e));
                t.parent[x.edges[e].dst] = {{v, SignedEdge{int(e), false}}};
                t.discovery_order.push_back(x.edges[e].dst);
            }
            if (x.edges[e].dst == v && !seen[x.edges[e].src]) {
                seen[x.edges[e].src] = 1;
                t.tree_edges.insert(int(e));
                t.parent[x.edges[e].src] = {{v, SignedEdge{int(e), true}}};
                t.discovery_order.push_back(x.edges[e].src);
            }
        }
    }
    return t;
}

// Signed edge path from the basepoint to v along the tree.
inline std::vector<SignedEdge> tree_path(const SpanningTree& t, int v) {
    std::vector<SignedEdge> rev;
    while (t.parent[v]) {
        rev.push_back(t.parent[v]->second);
        v = t.parent[v]->first;
    }
    return {rev.rbegin(), rev.rend()};
}

// Presentation of the fundamental group at the basepoint, with the word each
// edge contributes to a loop: tree edges give the empty word, every other
// component edge gives one generator.
struct Pi1Presentation {
    Presentation group;
    std::vector<Word> edge_labels; // one per edge; empty word off the component
    SpanningTree tree;
    std::vector<int> generator_edges; // edge index of each generator
};

inline Pi1Presentation fundamental_group_presentation(const TwoComplex& x) {
    require_valid(x);
    Pi1Presentation out;
    out.tree = spanning_tree(x);
    std::vector<char> in_component(x.vertex_count, 0);
    for (int v : out.tree.discovery_order)
        in_component[v] = 1;

    std::vector<int> gen_of_edge(x.edges.size(), -1);
    for (std::size_t e = 0; e < x.edges.size(); ++e) {
        if (!in_component[x.edges[e].src]) continue;
        if (out.tree.tree_edges.count(int(e))) continue;
        gen_of_edge[e] = int(out.generator_edges.size());
        out.generator_edges.push_back(int(e));
    }
    const int k = int(out.generator_edges.size());

    out.edge_labels.assign(x.edges.size(), empty_word(k));
    for (std::size_t e = 0; e < x.edges.size(); ++e)
        if (gen_of_edge[e] != -1)
            out.edge_labels[e] = single_letter_word(pos(gen_of_edge[e]), k);

    std::vector<Word> relators;
    for (const auto& bnd : x.faces) {
        if (!in_component[x.edge_tail(bnd.front())]) continue;
        Word w = empty_word(k);
        for (const SignedEdge& s : bnd) {
            const Word& lab = out.edge_labels[s.edge];
            w = concat_words(w, s.reversed ? invert_word(lab) : lab);
        }
        relators.push_back(std::move(w));
    }
    out.group = make_presentation(k, std::move(relators));
    return out;
}

// The sub-complex reachable from the basepoint, vertices renumbered in
// breadth-first discovery order; faces survive iff their boundary does.
inline TwoComplex basepoint_component(const TwoComplex& x) {
    require_valid(x);
    SpanningTree t = spanning_tree(x);
    std::vector<int> new_vertex(x.vertex_count, -1);
    for (std::size_t i = 0; i < t.discovery_order.size(); ++i)
        new_vertex[t.discovery_order[i]] = int(i);

    TwoComplex out;
    out.vertex_count = int(t.discovery_order.size());
    out.basepoint = 0;
    out.cell3_count = x.cell3_count;
    std::vector<int> new_edge(x.edges.size(), -1);
    for (std::size_t e = 0; e < x.edges.size(); ++e) {
        if (new_vertex[x.edges[e].src] == -1) continue;
        new_edge[e] = int(out.edges.size());
        out.edges.push_back({new_vertex[x.edges[e].src], new_vertex[x.edges[e].dst]});
    }
    for (const auto& bnd : x.faces) {
        if (new_vertex[x.edge_tail(bnd.front())] == -1) continue;
        std::vector<SignedEdge> nb;
        nb.reserve(bnd.size());
        for (const SignedEdge& s : bnd)
            nb.push_back(SignedEdge{new_edge[s.edge], s.reversed});
        out.faces.push_back(std::move(nb));
    }
    return out;
}

} // namespace covspace
