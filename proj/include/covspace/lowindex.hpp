#pragma once

#include <algorithm>
#include <map>
#include <vector>

#include "covspace/coset.hpp"
#include "covspace/presentation.hpp"

namespace covspace {

namespace detail {

// Backtracking search over partial coset tables. New cosets are only ever
// introduced at the first undefined entry in row-major order, so every
// completed table is already in breadth-first standard form and each pointed
// subgroup is produced exactly once.
struct LowIndexSearch {
    const Presentation& pres;
    int max_index;
    int ncols;
    std::vector<std::vector<int>> rel_slots;
    std::vector<std::vector<int>> table;
    std::vector<std::pair<int, int>> trail; // (coset, slot) assignments to undo
    std::vector<CosetTable> found;

    LowIndexSearch(const Presentation& p, int max_index_)
        : pres(p), max_index(max_index_), ncols(2 * p.generator_count) {
        for (const Word& r : p.relators)
            rel_slots.push_back(word_slots(r));
        table.emplace_back(ncols, -1);
    }

    void assign(int a, int s, int b) {
        table[a][s] = b;
        trail.emplace_back(a, s);
        if (table[b][s ^ 1] == -1) {
            table[b][s ^ 1] = a;
            trail.emplace_back(b, s ^ 1);
        }
    }

    void undo_to(std::size_t mark, std::size_t ncosets) {
        while (trail.size() > mark) {
            auto [a, s] = trail.back();
            trail.pop_back();
            table[a][s] = -1;
        }
        table.resize(ncosets, std::vector<int>(ncols, -1));
    }

    // Scan every relator at every coset, applying forced deductions until a
    // fixpoint. Returns false on contradiction.
    bool propagate() {
        bool changed = true;
        while (changed) {
            changed = false;
            for (int c = 0; c < int(table.size()); ++c)
                for (const auto& w : rel_slots) {
                    int f = c;
                    std::size_t i = 0;
                    while (i < w.size() && table[f][w[i]] != -1) {
                        f = table[f][w[i]];
                        ++i;
                    }
                    if (i == w.size()) {
                        if (f != c) return false;
                        continue;
                    }
                    int b = c;
                    std::size_t j = w.size();
                    while (j > i + 1 && table[b][w[j - 1] ^ 1] != -1) {
                        b = table[b][w[j - 1] ^ 1];
                        --j;
                    }
                    if (j != i + 1) continue; // more than one gap
                    int s = w[i];
                    // entries are assigned in mutually inverse pairs and
                    // table[f][s] is undefined, so a defined reverse slot
                    // can only point somewhere else: contradiction
                    if (table[b][s ^ 1] != -1)
                        return false;
                    assign(f, s, b);
                    changed = true;
                }
        }
        return true;
    }

    void search() {
        int a = -1, s = -1;
        for (int c = 0; c < int(table.size()) && a == -1; ++c)
            for (int t = 0; t < ncols; ++t)
                if (table[c][t] == -1) {
                    a = c;
                    s = t;
                    break;
                }
        if (a == -1) {
            CosetTable t;
            t.presentation = pres;
            t.coset_count = int(table.size());
            t.action.reserve(table.size() * ncols);
            for (const auto& row : table)
                t.action.insert(t.action.end(), row.begin(), row.end());
            found.push_back(std::move(t));
            return;
        }
        std::size_t ncosets = table.size();
        for (int b = 0; b <= int(ncosets); ++b) {
            if (b < int(ncosets)) {
                if (table[b][s ^ 1] != -1) continue;
            } else {
                if (int(ncosets) >= max_index) break;
                table.emplace_back(ncols, -1);
            }
            std::size_t mark = trail.size();
            assign(a, s, b);
            if (propagate())
                search();
            undo_to(mark, ncosets);
        }
    }
};

} // namespace detail

// All pointed subgroups of index <= max_index, as standardized complete coset
// tables, sorted by (coset_count, lexicographic table order). The one-coset
// table (the full group) is always present.
inline std::vector<CosetTable> low_index_subgroups(const Presentation& p, int max_index) {
    if (max_index < 1)
        throw input_error("max_index must be positive");
    detail::LowIndexSearch ls(p, max_index);
    ls.search();
    for (CosetTable& t : ls.found)
        validate_table(t);
    std::sort(ls.found.begin(), ls.found.end(), [](const CosetTable& x, const CosetTable& y) {
        if (x.coset_count != y.coset_count)
            return x.coset_count < y.coset_count;
        return x.action < y.action;
    });
    return ls.found;
}

// Canonical form of the table re-pointed at coset c: the subgroup of the same
// cover seen from another basepoint in the fiber, i.e. a conjugate.
inline CosetTable repoint_table(const CosetTable& t, int c) {
    if (c < 0 || c >= t.coset_count)
        throw input_error("coset out of range");
    const int ncols = t.cols();
    std::vector<int> to_new(t.coset_count, -1), to_old;
    to_new[c] = 0;
    to_old.push_back(c);
    for (int i = 0; i < int(to_old.size()); ++i)
        for (int s = 0; s < ncols; ++s) {
            int d = t.at(to_old[i], s);
            if (to_new[d] == -1) {
                to_new[d] = int(to_old.size());
                to_old.push_back(d);
            }
        }
    CosetTable r;
    r.presentation = t.presentation;
    r.coset_count = t.coset_count;
    r.action.resize(t.action.size());
    for (int x = 0; x < t.coset_count; ++x)
        for (int s = 0; s < ncols; ++s)
            r.at(to_new[x], s) = to_new[t.at(x, s)];
    return r;
}

// Group pointed subgroups into conjugacy classes: tables are conjugate iff
// re-pointing one at some coset yields the other. Returns a class id per
// table, numbered by first occurrence.
inline std::vector<int> conjugacy_class_ids(const std::vector<CosetTable>& tables) {
    std::vector<int> ids(tables.size(), -1);
    std::map<std::pair<int, std::vector<int>>, int> canon_to_class;
    int next = 0;
    for (std::size_t i = 0; i < tables.size(); ++i) {
        std::vector<int> best;
        for (int c = 0; c < tables[i].coset_count; ++c) {
            CosetTable r = repoint_table(tables[i], c);
            if (best.empty() || r.action < best)
                best = r.action;
        }
        auto key = std::make_pair(tables[i].coset_count, best);
        auto [it, inserted] = canon_to_class.try_emplace(key, next);
        if (inserted) ++next;
        ids[i] = it->second;
    }
    return ids;
}

} // namespace covspace
