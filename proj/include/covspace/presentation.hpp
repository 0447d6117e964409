#pragma once

#include <algorithm>
#include <limits>
#include <string>
#include <vector>

#include "covspace/errors.hpp"
#include "covspace/smith.hpp"
#include "covspace/word.hpp"

namespace covspace {

// A finite group presentation. Relators are stored freely reduced; relators
// that reduce to the empty word are dropped. generator_names is either empty
// (unnamed, e.g. extracted from a large complex) or one lowercase letter per
// generator.
struct Presentation {
    int generator_count = 0;
    std::vector<char> generator_names;
    std::vector<Word> relators;

    auto operator<=>(const Presentation&) const = default;
};

inline std::vector<char> default_generator_names(int count) {
    if (count > 26) return {};
    std::vector<char> names;
    for (int i = 0; i < count; ++i)
        names.push_back(char('a' + i));
    return names;
}

inline Presentation make_presentation(int generator_count, std::vector<Word> relators,
                                      std::vector<char> names = {}) {
    if (generator_count < 0)
        throw input_error("negative generator count");
    if (names.empty())
        names = default_generator_names(generator_count);
    if (!names.empty()) {
        if (int(names.size()) != generator_count)
            throw input_error("generator name count does not match generator count");
        for (char c : names)
            if (c < 'a' || c > 'z')
                throw input_error(std::string("generator name '") + c +
                                  "' is not a lowercase letter");
        auto sorted = names;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw input_error("duplicate generator name");
    }
    Presentation p;
    p.generator_count = generator_count;
    p.generator_names = std::move(names);
    for (Word& r : relators) {
        Word reduced = reduce_word(r.letters, generator_count);
        if (!reduced.empty())
            p.relators.push_back(std::move(reduced));
    }
    return p;
}

inline Presentation make_presentation(const std::vector<char>& names,
                                      std::vector<Word> relators) {
    return make_presentation(int(names.size()), std::move(relators), names);
}

// Invariant factors and free rank of the abelianized group: factors are
// each >= 2 and each divides the next.
struct AbelianInvariants {
    std::vector<long long> invariant_factors;
    int free_rank = 0;

    bool trivial() const { return invariant_factors.empty() && free_rank == 0; }
    auto operator<=>(const AbelianInvariants&) const = default;
};

// Exponent matrix of the relators: one row per relator, entry (r, g) is the
// total signed exponent of generator g in relator r.
inline BigMatrix relator_exponent_matrix(const Presentation& p) {
    BigMatrix m(p.relators.size(), std::vector<bigint>(p.generator_count, 0));
    for (std::size_t r = 0; r < p.relators.size(); ++r)
        for (const Letter& l : p.relators[r].letters)
            m[r][l.gen] += l.inv ? -1 : 1;
    return m;
}

inline AbelianInvariants abelianization_invariants(const Presentation& p) {
    SmithDecomposition s = smith_normal_form(relator_exponent_matrix(p));
    AbelianInvariants inv;
    inv.free_rank = p.generator_count - int(s.rank);
    for (std::size_t i = 0; i < s.rank; ++i) {
        const bigint& d = s.d[i][i];
        if (d == 1) continue;
        if (d > std::numeric_limits<long long>::max())
            throw input_error("invariant factor too large");
        inv.invariant_factors.push_back(d.convert_to<long long>());
    }
    return inv;
}

} // namespace covspace
