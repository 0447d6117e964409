#pragma once

#include <numeric>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "covspace/errors.hpp"

namespace covspace {

// Symbolic descriptor of the lens space L(n; l1..lk): fundamental group Z_n,
// twist parameters l_i taken mod n and coprime to n.
struct LensSpace {
    long long n = 1;
    std::vector<long long> params;

    auto operator<=>(const LensSpace&) const = default;
};

inline long long canonical_residue(long long l, long long n) {
    long long r = l % n;
    if (r < 0) r += n;
    return r;
}

inline LensSpace make_lens_space(long long n, std::vector<long long> params) {
    if (n < 1)
        throw input_error("lens space order must be >= 1");
    if (params.empty())
        throw input_error("lens space needs at least one parameter");
    LensSpace L;
    L.n = n;
    for (long long l : params) {
        long long r = canonical_residue(l, n);
        if (std::gcd(r, n) != 1)
            throw input_error("parameter " + std::to_string(l) +
                              " is not coprime to " + std::to_string(n));
        L.params.push_back(r);
    }
    return L;
}

inline long long lens_pi1(const LensSpace& L) { return L.n; }

// One connected cover per divisor m of n: the lens space of order m with the
// parameters reduced mod m, reached by a projection of n/m sheets whose
// circle components raise the loop to the power p = n/m.
struct LensCoverRecord {
    long long m = 1;      // order of the cover's fundamental group
    long long p = 1;      // n / m; each circle factor of the projection is degree p
    long long sheets = 1; // = p
    LensSpace cover;

    auto operator<=>(const LensCoverRecord&) const = default;
};

inline std::vector<LensCoverRecord> classify_lens_covers(const LensSpace& L) {
    if (L.params.size() <= 1)
        throw input_error("lens cover classification needs at least two parameters; "
                          "a single parameter is the circle case");
    std::vector<LensCoverRecord> out;
    for (long long m = 1; m <= L.n; ++m) {
        if (L.n % m != 0) continue;
        LensCoverRecord rec;
        rec.m = m;
        rec.p = L.n / m;
        rec.sheets = rec.p;
        rec.cover = make_lens_space(m, L.params);
        out.push_back(std::move(rec));
    }
    return out;
}

// Result of the brute-force kernel check below.
struct PullbackCheck {
    enum class Verdict { pass, fail, inconclusive };
    struct Solution {
        long long a = 0;
        long long b = 0;
        long long x = 0; // witness multiplier: (a, b) = x * (gen_a, gen_b)
    };
    Verdict verdict = Verdict::inconclusive;
    std::vector<Solution> solutions;
    std::string failure;
};

// Brute-force check that the solutions of a*l = b*p (mod n) with |a| <= window
// are exactly the integer multiples of the claimed generator: the kernel group
// of the pullback is infinite cyclic on (p, l mod m). The claimed generator
// can be overridden to run negative controls, which must fail.
inline PullbackCheck verify_lens_pullback_group(long long n, long long m, long long l,
                                                long long window,
                                                long long claimed_a, long long claimed_b) {
    if (n < 1 || m < 1 || n % m != 0)
        throw input_error("need m dividing n");
    if (std::gcd(canonical_residue(l, n), n) != 1)
        throw input_error("l must be coprime to n");
    if (window < 1)
        throw input_error("window must be positive");
    const long long p = n / m;
    if (claimed_a < 0) claimed_a = p;
    if (claimed_b < 0) claimed_b = canonical_residue(l, m);

    PullbackCheck chk;
    auto fail = [&](std::string why) {
        chk.verdict = PullbackCheck::Verdict::fail;
        chk.failure = std::move(why);
        return chk;
    };

    std::set<std::pair<long long, long long>> pairs;
    std::set<long long> multipliers;
    for (long long a = -window; a <= window; ++a)
        for (long long b = 0; b < m; ++b) {
            if (canonical_residue(a * l - b * p, n) != 0) continue;
            // surjectivity onto the window: every solution is a multiple of
            // the claimed generator
            if (claimed_a == 0) {
                if (a != 0)
                    return fail("solution (" + std::to_string(a) + "," + std::to_string(b) +
                                ") has nonzero first component");
            } else if (a % claimed_a != 0) {
                return fail("solution (" + std::to_string(a) + "," + std::to_string(b) +
                            ") is not a multiple of the claimed generator");
            }
            long long x = claimed_a == 0 ? 0 : a / claimed_a;
            if (canonical_residue(x * claimed_b - b, m) != 0)
                return fail("solution (" + std::to_string(a) + "," + std::to_string(b) +
                            ") disagrees with multiplier " + std::to_string(x));
            // injectivity: distinct multipliers, distinct solutions
            if (!multipliers.insert(x).second)
                return fail("two solutions share the multiplier " + std::to_string(x));
            chk.solutions.push_back({a, b, x});
            pairs.insert({a, b});
        }

    // subgroup structure: closed under negation, and under adding the
    // generator while it stays inside the window
    for (const auto& s : chk.solutions) {
        if (!pairs.count({-s.a, canonical_residue(-s.b, m)}))
            return fail("solution set is not closed under negation");
        long long na = s.a + claimed_a;
        long long nb = canonical_residue(s.b + claimed_b, m);
        if (na >= -window && na <= window && !pairs.count({na, nb}))
            return fail("solution set is not closed under adding the generator");
    }

    bool nontrivial = false;
    for (const auto& s : chk.solutions)
        if (s.a != 0 || s.b != 0) nontrivial = true;
    chk.verdict =
        nontrivial ? PullbackCheck::Verdict::pass : PullbackCheck::Verdict::inconclusive;
    return chk;
}

inline PullbackCheck verify_lens_pullback_group(long long n, long long m, long long l,
                                                long long window) {
    return verify_lens_pullback_group(n, m, l, window, -1, -1);
}

} // namespace covspace
