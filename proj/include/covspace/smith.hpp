#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "covspace/errors.hpp"

namespace covspace {

using bigint = boost::multiprecision::cpp_int;
using BigMatrix = std::vector<std::vector<bigint>>; // row major, rectangular

inline BigMatrix identity_matrix(std::size_t n) {
    BigMatrix m(n, std::vector<bigint>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        m[i][i] = 1;
    return m;
}

// d = u * m * v with u, v unimodular and d diagonal, each diagonal entry
// nonnegative and dividing the next.
struct SmithDecomposition {
    BigMatrix d;
    BigMatrix u;
    BigMatrix v;
    std::size_t rank = 0; // number of nonzero diagonal entries
};

inline SmithDecomposition smith_normal_form(BigMatrix m) {
    const std::size_t rows = m.size();
    const std::size_t cols = rows ? m[0].size() : 0;
    SmithDecomposition s;
    s.u = identity_matrix(rows);
    s.v = identity_matrix(cols);

    auto swap_rows = [&](std::size_t a, std::size_t b) {
        if (a == b) return;
        std::swap(m[a], m[b]);
        std::swap(s.u[a], s.u[b]);
    };
    auto swap_cols = [&](std::size_t a, std::size_t b) {
        if (a == b) return;
        for (auto& row : m) std::swap(row[a], row[b]);
        for (auto& row : s.v) std::swap(row[a], row[b]);
    };
    auto add_row = [&](std::size_t dst, std::size_t src, const bigint& q) {
        // row dst += q * row src
        for (std::size_t j = 0; j < cols; ++j) m[dst][j] += q * m[src][j];
        for (std::size_t j = 0; j < rows; ++j) s.u[dst][j] += q * s.u[src][j];
    };
    auto add_col = [&](std::size_t dst, std::size_t src, const bigint& q) {
        for (std::size_t i = 0; i < rows; ++i) m[i][dst] += q * m[i][src];
        for (std::size_t i = 0; i < cols; ++i) s.v[i][dst] += q * s.v[i][src];
    };
    auto negate_row = [&](std::size_t i) {
        for (auto& x : m[i]) x = -x;
        for (auto& x : s.u[i]) x = -x;
    };

    std::size_t t = 0;
    while (t < rows && t < cols) {
        // pivot: smallest nonzero absolute value in the working submatrix,
        // ties broken by row-major position
        std::size_t pi = rows, pj = cols;
        bigint best = 0;
        for (std::size_t i = t; i < rows; ++i)
            for (std::size_t j = t; j < cols; ++j) {
                if (m[i][j] == 0) continue;
                bigint a = abs(m[i][j]);
                if (best == 0 || a < best) {
                    best = a;
                    pi = i;
                    pj = j;
                }
            }
        if (best == 0) break; // submatrix is zero
        swap_rows(t, pi);
        swap_cols(t, pj);

        bool clean = true;
        for (std::size_t i = t + 1; i < rows && clean; ++i)
            if (m[i][t] != 0) clean = false;
        for (std::size_t j = t + 1; j < cols && clean; ++j)
            if (m[t][j] != 0) clean = false;

        if (!clean) {
            // one round of Euclidean reduction, then re-pick the pivot
            for (std::size_t i = t + 1; i < rows; ++i)
                if (m[i][t] != 0) add_row(i, t, -(m[i][t] / m[t][t]));
            for (std::size_t j = t + 1; j < cols; ++j)
                if (m[t][j] != 0) add_col(j, t, -(m[t][j] / m[t][t]));
            continue;
        }

        // pivot divides everything that remains, or we fold a bad row in and
        // restart this diagonal position
        bool divides_all = true;
        for (std::size_t i = t + 1; i < rows && divides_all; ++i)
            for (std::size_t j = t + 1; j < cols && divides_all; ++j)
                if (m[i][j] % m[t][t] != 0) {
                    add_row(t, i, 1);
                    divides_all = false;
                }
        if (!divides_all) continue;

        if (m[t][t] < 0) negate_row(t);
        ++t;
    }

    s.rank = t;
    s.d = std::move(m);
    return s;
}

} // namespace covspace
