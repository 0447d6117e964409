#include <catch2/catch_amalgamated.hpp>

#include <numeric>
#include <random>

#include "covspace/coset.hpp"
#include "covspace/lowindex.hpp"
#include "support/oracles.hpp"

using namespace covspace;

namespace {

Presentation cyclic(int n) {
    std::vector<int> rel(n, 1);
    return make_presentation(1, {word_from_ints(rel, 1)});
}

Presentation binary_icosahedral() {
    return make_presentation(3, {
        word_from_ints({1, 1, -3, -2, -1}, 3),
        word_from_ints({2, 2, 2, -3, -2, -1}, 3),
        word_from_ints({3, 3, 3, 3, 3, -3, -2, -1}, 3),
    }, {'r', 's', 't'});
}

} // namespace

TEST_CASE("enumeration over the trivial subgroup gives the group order", "[coset]") {
    CHECK(todd_coxeter(cyclic(5), {}).coset_count == 5);
    CHECK(todd_coxeter(binary_icosahedral(), {}).coset_count == 120);
    CHECK(todd_coxeter(make_presentation(1, {word_from_ints({1}, 1)}), {}).coset_count == 1);
}

TEST_CASE("Z5 enumeration matches modular arithmetic", "[coset]") {
    // build the action c -> c+1 mod 5 directly and standardize it
    CosetTable arith;
    arith.presentation = cyclic(5);
    arith.coset_count = 5;
    arith.action.resize(10);
    for (int c = 0; c < 5; ++c) {
        arith.at(c, 0) = (c + 1) % 5;
        arith.at(c, 1) = (c + 4) % 5;
    }
    validate_table(arith);
    CHECK(todd_coxeter(cyclic(5), {}).same_action(standardize_table(arith)));
}

TEST_CASE("enumeration over a subgroup gives the index", "[coset]") {
    // 2Z6 inside Z6
    CosetTable t = todd_coxeter(cyclic(6), {word_from_ints({1, 1}, 1)});
    CHECK(t.coset_count == 2);
    CHECK(trace_word(t, word_from_ints({1, 1}, 1), 0) == 0);

    // the whole group as a subgroup of the free group on one letter
    CHECK(todd_coxeter(make_presentation(1, {}), {word_from_ints({1}, 1)}).coset_count == 1);
}

TEST_CASE("triangle group orders", "[coset]") {
    // von Dyck groups (2,3,n): A4, S4, A5 for n = 3, 4, 5; infinite for n = 7
    auto dyck = [](int n) {
        std::vector<int> abn;
        for (int i = 0; i < n; ++i) {
            abn.push_back(1);
            abn.push_back(2);
        }
        return make_presentation(2, {word_from_ints({1, 1}, 2),
                                     word_from_ints({2, 2, 2}, 2), word_from_ints(abn, 2)});
    };
    CHECK(todd_coxeter(dyck(3), {}).coset_count == 12);
    CHECK(todd_coxeter(dyck(4), {}).coset_count == 24);
    CHECK(todd_coxeter(dyck(5), {}).coset_count == 60);
    CHECK_THROWS_AS(todd_coxeter(dyck(7), {}, 20000), resource_exhausted);
}

TEST_CASE("infinite index exhausts the cap", "[coset]") {
    CHECK_THROWS_AS(todd_coxeter(make_presentation(1, {}), {}, 1000), resource_exhausted);
    CHECK_THROWS_AS(todd_coxeter(make_presentation(2, {}), {word_from_ints({1}, 2)}, 500),
                    resource_exhausted);
}

TEST_CASE("trace of words", "[coset]") {
    CosetTable t = todd_coxeter(cyclic(5), {});
    CHECK(trace_word(t, word_from_ints({1}, 1), 0) == 1);
    CHECK(trace_word(t, empty_word(1), 3) == 3);
    for (const Word& r : t.presentation.relators)
        for (int c = 0; c < t.coset_count; ++c)
            CHECK(trace_word(t, r, c) == c);
    CHECK_THROWS_AS(trace_word(t, word_from_ints({1}, 1), 7), input_error);
    CHECK_THROWS_AS(trace_word(t, word_from_ints({1}, 2), 0), input_error);
}

TEST_CASE("table invariants hold for enumerated tables", "[coset]") {
    Presentation q8 = make_presentation(3, {
        word_from_ints({2, -1, 3}, 3),
        word_from_ints({-3, -1, 2}, 3),
        word_from_ints({-2, 3, -1}, 3),
    });
    for (const Presentation& p : {cyclic(7), binary_icosahedral(), q8}) {
        CosetTable t = todd_coxeter(p, {}, 100000);
        CHECK_NOTHROW(validate_table(t));
        // generator columns are mutually inverse permutations
        for (int g = 0; g < p.generator_count; ++g) {
            std::vector<char> hit(t.coset_count, 0);
            for (int c = 0; c < t.coset_count; ++c) {
                int d = t.at(c, 2 * g);
                CHECK(!hit[d]);
                hit[d] = 1;
                CHECK(t.at(d, 2 * g + 1) == c);
            }
        }
    }
}

TEST_CASE("standardization is idempotent and canonical", "[coset]") {
    CosetTable t = todd_coxeter(cyclic(5), {});
    CosetTable s = standardize_table(t);
    CHECK(s.same_action(t)); // todd_coxeter already standardizes
    CHECK(standardize_table(s).same_action(s));

    CosetTable one = todd_coxeter(cyclic(1), {});
    CHECK(standardize_table(one).same_action(one));

    // permuting the cosets (fixing 0) and re-standardizing recovers the table
    std::mt19937 rng(99);
    for (int trial = 0; trial < 25; ++trial) {
        std::vector<int> perm(t.coset_count);
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin() + 1, perm.end(), rng);
        CosetTable shuffled = t;
        for (int c = 0; c < t.coset_count; ++c)
            for (int s2 = 0; s2 < t.cols(); ++s2)
                shuffled.at(perm[c], s2) = perm[t.at(c, s2)];
        CHECK(standardize_table(shuffled).same_action(t));
    }
}

TEST_CASE("schreier generators regenerate the subgroup", "[coset]") {
    // trivial group on no generators: nothing to return
    CHECK(schreier_generators(todd_coxeter(make_presentation(0, {}), {})).empty());

    // <a | a>: the one Schreier word is a relator consequence fixing coset 0
    CosetTable triv = todd_coxeter(cyclic(1), {});
    for (const Word& h : schreier_generators(triv))
        CHECK(trace_word(triv, h, 0) == 0);
    CHECK(todd_coxeter(cyclic(1), schreier_generators(triv)).coset_count == 1);

    // index-2 subgroup of Z6
    CosetTable t = todd_coxeter(cyclic(6), {word_from_ints({1, 1}, 1)});
    std::vector<Word> gens = schreier_generators(t);
    for (const Word& h : gens)
        CHECK(trace_word(t, h, 0) == 0);
    CosetTable again = todd_coxeter(cyclic(6), gens);
    CHECK(again.coset_count == 2);
    CHECK(again.same_action(t));

    // free group of rank 2: every index-2 table has exactly 3 nontrivial
    // Schreier generators (rank formula 1 + index*(rank-1))
    Presentation f2 = make_presentation(2, {});
    std::vector<CosetTable> subs = low_index_subgroups(f2, 2);
    int index2 = 0;
    for (const CosetTable& s : subs) {
        if (s.coset_count != 2) continue;
        ++index2;
        CHECK(schreier_generators(s).size() == 3);
    }
    CHECK(index2 == 3);
}

TEST_CASE("subgroup generators fix coset zero", "[coset][property]") {
    std::mt19937 rng(1312);
    Presentation p = binary_icosahedral();
    for (int trial = 0; trial < 10; ++trial) {
        std::vector<Word> hgens;
        for (int i = 0; i < 2; ++i) {
            Word w = oracles::random_word(rng, 3, 6);
            if (!w.empty()) hgens.push_back(w);
        }
        CosetTable t = todd_coxeter(p, hgens, 100000);
        for (const Word& h : hgens)
            CHECK(trace_word(t, h, 0) == 0);
        CHECK(120 % t.coset_count == 0);
    }
}
