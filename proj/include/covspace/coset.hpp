#pragma once

#include <algorithm>
#include <deque>
#include <string>
#include <vector>

#include "covspace/errors.hpp"
#include "covspace/presentation.hpp"
#include "covspace/word.hpp"

namespace covspace {

inline constexpr int kDefaultMaxCosets = 1'000'000;

// A complete transitive action of the generators on the cosets of a subgroup.
// Row c holds the images of coset c under g0, g0^-1, g1, g1^-1, ...
// Coset 0 is the subgroup itself and serves as the basepoint.
struct CosetTable {
    Presentation presentation;
    int coset_count = 0;
    std::vector<int> action; // coset_count * 2*generator_count entries
    // Generator words of the coset-0 stabilizer, when known (the words the
    // enumeration was run with). May be empty.
    std::vector<Word> subgroup_words;

    int cols() const { return 2 * presentation.generator_count; }
    int at(int coset, int slot) const { return action[coset * cols() + slot]; }
    int& at(int coset, int slot) { return action[coset * cols() + slot]; }

    bool same_action(const CosetTable& o) const {
        return presentation.generator_count == o.presentation.generator_count &&
               coset_count == o.coset_count && action == o.action;
    }
};

inline int trace_word(const CosetTable& t, const Word& w, int coset) {
    if (coset < 0 || coset >= t.coset_count)
        throw input_error("coset " + std::to_string(coset) + " out of range");
    if (w.alphabet != t.presentation.generator_count)
        throw input_error("word alphabet does not match table");
    for (const Letter& l : w.letters)
        coset = t.at(coset, l.slot());
    return coset;
}

// Checks completeness, mutually inverse generator columns, relator traces and
// transitivity from coset 0. Throws input_error on the first violation.
inline void validate_table(const CosetTable& t) {
    const int n = t.coset_count;
    const int k = t.presentation.generator_count;
    if (n <= 0)
        throw input_error("coset table must have at least one coset");
    if (int(t.action.size()) != n * 2 * k)
        throw input_error("coset table has wrong action size");
    for (int c = 0; c < n; ++c)
        for (int s = 0; s < 2 * k; ++s) {
            int d = t.at(c, s);
            if (d < 0 || d >= n)
                throw input_error("coset table entry out of range");
            if (t.at(d, s ^ 1) != c)
                throw input_error("generator columns are not mutually inverse");
        }
    for (const Word& r : t.presentation.relators)
        for (int c = 0; c < n; ++c)
            if (trace_word(t, r, c) != c)
                throw input_error("relator does not fix every coset");
    std::vector<char> seen(n, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
        int c = stack.back();
        stack.pop_back();
        for (int s = 0; s < 2 * k; ++s) {
            int d = t.at(c, s);
            if (!seen[d]) {
                seen[d] = 1;
                ++reached;
                stack.push_back(d);
            }
        }
    }
    if (reached != n)
        throw input_error("coset table is not transitive");
}

// Renumber cosets in breadth-first discovery order from coset 0, scanning
// generator columns in index order with the positive sign first. The result
// is the canonical representative of the pointed subgroup; idempotent.
inline CosetTable standardize_table(const CosetTable& t) {
    const int n = t.coset_count;
    const int ncols = t.cols();
    std::vector<int> to_new(n, -1), to_old;
    to_old.reserve(n);
    to_new[0] = 0;
    to_old.push_back(0);
    for (int i = 0; i < int(to_old.size()); ++i) {
        int c = to_old[i];
        for (int s = 0; s < ncols; ++s) {
            int d = t.at(c, s);
            if (to_new[d] == -1) {
                to_new[d] = int(to_old.size());
                to_old.push_back(d);
            }
        }
    }
    CosetTable r;
    r.presentation = t.presentation;
    r.coset_count = n;
    r.subgroup_words = t.subgroup_words;
    r.action.resize(t.action.size());
    for (int c = 0; c < n; ++c)
        for (int s = 0; s < ncols; ++s)
            r.at(to_new[c], s) = to_new[t.at(c, s)];
    return r;
}

namespace detail {

// Working state of an HLT enumeration: a growable table plus a union-find
// over cosets for coincidence processing. Merges keep the lower index.
struct TcState {
    int ncols;
    int max_live;
    std::vector<std::vector<int>> table;
    std::vector<int> parent;
    int live = 0;
    std::deque<int> merge_queue;

    TcState(int ncols_, int max_live_) : ncols(ncols_), max_live(max_live_) {
        new_coset();
    }

    int rep(int c) {
        while (parent[c] != c) {
            parent[c] = parent[parent[c]];
            c = parent[c];
        }
        return c;
    }

    int new_coset() {
        if (live >= max_live)
            throw resource_exhausted(
                "coset enumeration exceeded the cap of " + std::to_string(max_live) +
                " live cosets (infinite index or cap too small)");
        table.emplace_back(ncols, -1);
        parent.push_back(int(parent.size()));
        ++live;
        return int(table.size()) - 1;
    }

    int define(int a, int s) {
        int b = new_coset();
        table[a][s] = b;
        table[b][s ^ 1] = a;
        return b;
    }

    void merge(int a, int b) {
        a = rep(a);
        b = rep(b);
        if (a == b) return;
        if (a > b) std::swap(a, b);
        parent[b] = a;
        --live;
        merge_queue.push_back(b);
    }

    // Fold the rows of dead cosets into their representatives, merging any
    // cosets that collide in the process.
    void process_coincidences() {
        while (!merge_queue.empty()) {
            int dead = merge_queue.front();
            merge_queue.pop_front();
            for (int s = 0; s < ncols; ++s) {
                int d = table[dead][s];
                if (d == -1) continue;
                table[dead][s] = -1;
                if (table[d][s ^ 1] == dead)
                    table[d][s ^ 1] = -1;
                int mu = rep(dead), nu = rep(d);
                if (table[mu][s] != -1)
                    merge(nu, table[mu][s]);
                else if (table[nu][s ^ 1] != -1)
                    merge(mu, table[nu][s ^ 1]);
                else {
                    table[mu][s] = nu;
                    table[nu][s ^ 1] = mu;
                }
            }
        }
    }

    // Scan word w under coset a, demanding a.w = a; define new cosets to fill
    // the gap (HLT style). May trigger coincidences.
    void scan_and_fill(int a, const std::vector<int>& w) {
        if (w.empty()) return;
        while (true) {
            int f = rep(a);
            std::size_t i = 0;
            while (i < w.size() && table[f][w[i]] != -1) {
                f = rep(table[f][w[i]]);
                ++i;
            }
            if (i == w.size()) {
                if (f != rep(a)) {
                    merge(f, rep(a));
                    process_coincidences();
                }
                return;
            }
            int b = rep(a);
            std::size_t j = w.size();
            while (j > i + 1 && table[b][w[j - 1] ^ 1] != -1) {
                b = rep(table[b][w[j - 1] ^ 1]);
                --j;
            }
            if (j == i + 1) {
                // exactly one gap: a deduction, unless the backward side
                // already crosses it, which forces a coincidence
                int s = w[i];
                if (table[b][s ^ 1] != -1) {
                    merge(table[b][s ^ 1], f);
                    process_coincidences();
                } else {
                    table[f][s] = b;
                    table[b][s ^ 1] = f;
                }
                return;
            }
            define(f, w[i]);
        }
    }
};

inline std::vector<int> word_slots(const Word& w) {
    std::vector<int> slots;
    slots.reserve(w.size());
    for (const Letter& l : w.letters)
        slots.push_back(l.slot());
    return slots;
}

} // namespace detail

// HLT coset enumeration over the subgroup generated by the given words.
// Returns the standardized complete table; coset_count is the index.
inline CosetTable todd_coxeter(const Presentation& p,
                               const std::vector<Word>& subgroup_generators,
                               int max_cosets = kDefaultMaxCosets) {
    if (max_cosets < 1)
        throw input_error("max_cosets must be positive");
    std::vector<std::vector<int>> rel_slots, sub_slots;
    for (const Word& r : p.relators)
        rel_slots.push_back(detail::word_slots(r));
    for (const Word& h : subgroup_generators) {
        if (h.alphabet != p.generator_count)
            throw input_error("subgroup generator alphabet does not match presentation");
        sub_slots.push_back(detail::word_slots(h));
    }

    detail::TcState st(2 * p.generator_count, max_cosets);
    for (const auto& h : sub_slots)
        st.scan_and_fill(0, h);
    for (int a = 0; a < int(st.table.size()); ++a) {
        if (st.rep(a) != a) continue;
        for (const auto& r : rel_slots) {
            if (st.rep(a) != a) break;
            st.scan_and_fill(a, r);
        }
        if (st.rep(a) != a) continue;
        for (int s = 0; s < st.ncols; ++s)
            if (st.table[a][s] == -1)
                st.define(a, s);
    }

    // compact live cosets, preserving their relative order
    std::vector<int> compact(st.table.size(), -1);
    int n = 0;
    for (int c = 0; c < int(st.table.size()); ++c)
        if (st.rep(c) == c)
            compact[c] = n++;
    CosetTable t;
    t.presentation = p;
    t.coset_count = n;
    t.subgroup_words = subgroup_generators;
    t.action.assign(std::size_t(n) * 2 * p.generator_count, -1);
    for (int c = 0; c < int(st.table.size()); ++c) {
        if (st.rep(c) != c) continue;
        for (int s = 0; s < st.ncols; ++s)
            t.at(compact[c], s) = compact[st.rep(st.table[c][s])];
    }
    t = standardize_table(t);
    validate_table(t);
    return t;
}

// Breadth-first transversal words u_c, in the scan order used by
// standardize_table; u_0 is empty.
inline std::vector<Word> coset_transversal(const CosetTable& t) {
    const int k = t.presentation.generator_count;
    std::vector<Word> u(t.coset_count, empty_word(k));
    std::vector<char> have(t.coset_count, 0);
    have[0] = 1;
    std::vector<int> order{0};
    for (int i = 0; i < int(order.size()); ++i) {
        int c = order[i];
        for (int s = 0; s < 2 * k; ++s) {
            int d = t.at(c, s);
            if (!have[d]) {
                have[d] = 1;
                u[d] = concat_words(u[c], single_letter_word(Letter{s / 2, bool(s & 1)}, k));
                order.push_back(d);
            }
        }
    }
    return u;
}

// Schreier generators u_c g (u_{c.g})^-1 of the coset-0 stabilizer, over all
// cosets c and positive generators g; trivial ones are dropped.
inline std::vector<Word> schreier_generators(const CosetTable& t) {
    const int k = t.presentation.generator_count;
    std::vector<Word> u = coset_transversal(t);
    std::vector<Word> gens;
    for (int c = 0; c < t.coset_count; ++c)
        for (int g = 0; g < k; ++g) {
            int d = t.at(c, 2 * g);
            Word w = concat_words(concat_words(u[c], single_letter_word(pos(g), k)),
                                  invert_word(u[d]));
            if (!w.empty())
                gens.push_back(std::move(w));
        }
    return gens;
}

} // namespace covspace
