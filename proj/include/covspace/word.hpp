#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

#include "covspace/errors.hpp"

namespace covspace {

// Default cap on word length, guarding against runaway concatenation.
inline constexpr std::size_t kMaxWordLetters = std::size_t(1) << 20;

// One signed generator letter: generator index plus orientation.
struct Letter {
    int gen = 0;
    bool inv = false;

    Letter inverse() const { return Letter{gen, !inv}; }

    // Column index in a coset table: positive letters at 2g, inverses at 2g+1.
    int slot() const { return 2 * gen + (inv ? 1 : 0); }

    auto operator<=>(const Letter&) const = default;
};

inline Letter pos(int gen) { return Letter{gen, false}; }
inline Letter neg(int gen) { return Letter{gen, true}; }

// A freely reduced word over a fixed alphabet of `alphabet` generators.
// Instances are immutable in practice: every operation returns a new word.
struct Word {
    int alphabet = 0;
    std::vector<Letter> letters; // invariant: freely reduced, indices < alphabet

    bool empty() const { return letters.empty(); }
    std::size_t size() const { return letters.size(); }

    auto operator<=>(const Word&) const = default;
};

// Free reduction: cancel adjacent inverse pairs until none remain.
inline Word reduce_word(const std::vector<Letter>& raw, int alphabet,
                        std::size_t max_letters = kMaxWordLetters) {
    if (raw.size() > max_letters)
        throw input_error("word exceeds length cap");
    Word w;
    w.alphabet = alphabet;
    w.letters.reserve(raw.size());
    for (const Letter& l : raw) {
        if (l.gen < 0 || l.gen >= alphabet)
            throw input_error("letter index " + std::to_string(l.gen) +
                              " out of range for alphabet of size " + std::to_string(alphabet));
        if (!w.letters.empty() && w.letters.back() == l.inverse())
            w.letters.pop_back();
        else
            w.letters.push_back(l);
    }
    return w;
}

inline Word invert_word(const Word& w) {
    Word r;
    r.alphabet = w.alphabet;
    r.letters.reserve(w.size());
    for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it)
        r.letters.push_back(it->inverse());
    return r;
}

inline Word concat_words(const Word& u, const Word& v,
                         std::size_t max_letters = kMaxWordLetters) {
    if (u.alphabet != v.alphabet)
        throw input_error("cannot concatenate words over different alphabets");
    if (u.size() + v.size() > max_letters)
        throw input_error("word exceeds length cap");
    Word r = u;
    for (const Letter& l : v.letters) {
        if (!r.letters.empty() && r.letters.back() == l.inverse())
            r.letters.pop_back();
        else
            r.letters.push_back(l);
    }
    return r;
}

inline Word empty_word(int alphabet) {
    Word w;
    w.alphabet = alphabet;
    return w;
}

inline Word single_letter_word(Letter l, int alphabet) {
    return reduce_word({l}, alphabet);
}

// Convenience for tests and builders: signed ints, +1 = first generator,
// -1 = its inverse.
inline Word word_from_ints(const std::vector<int>& signed_letters, int alphabet) {
    std::vector<Letter> raw;
    raw.reserve(signed_letters.size());
    for (int s : signed_letters) {
        if (s == 0)
            throw input_error("0 is not a valid signed letter");
        raw.push_back(s > 0 ? pos(s - 1) : neg(-s - 1));
    }
    return reduce_word(raw, alphabet);
}

inline bool is_freely_reduced(const std::vector<Letter>& letters) {
    for (std::size_t i = 1; i < letters.size(); ++i)
        if (letters[i] == letters[i - 1].inverse())
            return false;
    return true;
}

} // namespace covspace
