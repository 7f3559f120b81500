#include "doctest.h"

#include <map>
#include <set>

#include "stanley/pattern_lab.hpp"
#include "stanley/permutation.hpp"

using namespace stanley;

namespace {

Permutation P(const std::string& s) { return Permutation::parse(s); }

// All canonical permutations of size exactly n.
std::vector<Permutation> canonical_sn(int n) {
    std::vector<Permutation> out;
    for_each_in_sn(n, 1, [&](int, const Permutation& w) {
        if (w.size() == n || (n == 1 && w.is_identity())) out.push_back(w);
    });
    return out;
}

std::vector<Permutation> canonical_up_to(int n) {
    std::vector<Permutation> out = {Permutation::identity()};
    for (int m = 2; m <= n; ++m)
        for (const Permutation& w : canonical_sn(m)) out.push_back(w);
    return out;
}

}  // namespace

TEST_CASE("canonical form trims trailing fixed points") {
    CHECK(Permutation({1, 2, 3}).is_identity());
    CHECK(Permutation({2, 1, 3, 4}) == Permutation({2, 1}));
    CHECK(Permutation(std::vector<int>{}).is_identity());
    CHECK(P("2143")(5) == 5);  // fixed beyond the window
    CHECK_THROWS_AS(Permutation({2, 2, 1}), invalid_input);
    CHECK_THROWS_AS(Permutation({0, 1}), invalid_input);
}

TEST_CASE("parsing and printing") {
    CHECK(P("243165").oneline() == std::vector<int>({2, 4, 3, 1, 6, 5}));
    CHECK(P("2 4 3 1 6 5") == P("243165"));
    CHECK(P("2,4,3,1,6,5") == P("243165"));
    CHECK(P("id").is_identity());
    CHECK(P("243165").str() == "243165");
    CHECK(shift(5, P("2 1 4 3 6 5")).str() == "1 2 3 4 5 7 6 9 8 11 10");
    CHECK_THROWS_AS(P("21x3"), invalid_input);
    CHECK_THROWS_AS(P("2413x"), invalid_input);
}

TEST_CASE("length") {
    CHECK(length(Permutation::identity()) == 0);
    CHECK(length(P("243165")) == 5);
    CHECK(length(P("2143")) == 2);
}

TEST_CASE("code") {
    CHECK(code(P("41832567")).entries == std::vector<int>({3, 0, 5, 1, 0, 0, 0, 0}));
    CHECK(code(Permutation::identity()).entries.empty());
    CHECK(code(P("243165")).entries == std::vector<int>({1, 2, 1, 0, 1, 0}));
}

TEST_CASE("code_inverse") {
    CHECK(code_inverse(Code({3, 0, 5, 1})) == P("41832567"));
    CHECK(code_inverse(Code(std::vector<int>{})).is_identity());
    CHECK(code_inverse(Code({2, 2})) == P("3412"));
}

TEST_CASE("code round trips on all small permutations") {
    for (int n = 1; n <= 7; ++n)
        for_each_in_sn(n, 1, [&](int, const Permutation& w) {
            CHECK(code_inverse(code(w)) == w);
        });
}

TEST_CASE("length equals code sum") {
    for (const Permutation& w : canonical_up_to(6)) {
        int sum = 0;
        for (int c : code(w).entries) sum += c;
        CHECK(length(w) == sum);
    }
}

TEST_CASE("flatten") {
    CHECK(flatten(std::vector<int>{3, 1, 6, 2, 4}) == P("31524"));
    CHECK(flatten(std::vector<int>{1, 2, 3}).is_identity());
    CHECK(flatten(std::vector<int>{9, 7}) == P("21"));
    CHECK_THROWS_AS(flatten(std::vector<int>{2, 2}), invalid_input);
}

TEST_CASE("containment") {
    CHECK(contains(P("2513764"), P("2143")));
    CHECK(contains(P("2513764"), P("23154")));
    // word-level: 1234 keeps its nominal length and is avoided
    CHECK_FALSE(contains(P("2513764"), std::vector<int>{1, 2, 3, 4}));
    CHECK(contains(P("2513764"), std::vector<int>{1, 2, 3}));
    // class-level: 1234 is the identity, which every permutation contains
    CHECK(contains(P("2513764"), P("1234")));
    CHECK(contains(P("2143"), P("2143")));
    CHECK(contains(P("21"), Permutation::identity()));

    auto occ = occurrences(P("2513764"), std::vector<int>{1, 2, 3, 4});
    CHECK(occ.empty());
    occ = occurrences(P("2513764"), P("2143"));
    CHECK(!occ.empty());
    for (const auto& positions : occ) {
        std::vector<int> values;
        for (int p : positions) values.push_back(P("2513764")(p));
        CHECK(flatten(values) == P("2143"));
    }
}

TEST_CASE("specialized 2143 test agrees with general containment") {
    const Permutation pat = P("2143");
    for (int n = 1; n <= 7; ++n)
        for_each_in_sn(n, 1, [&](int, const Permutation& w) {
            CHECK(contains_2143(w) == contains(w, pat));
        });
}

TEST_CASE("containment is reflexive and transitive, and is generated by deletions") {
    // Pattern closures computed by repeated one-point deletion.
    std::map<Permutation, std::set<Permutation>> closure;
    for (int n = 1; n <= 6; ++n)
        for (const Permutation& w : canonical_sn(n)) {
            std::set<Permutation>& pats = closure[w];
            pats.insert(w);
            for (const Permutation& v : one_point_deletions(w)) {
                pats.insert(v);
                const auto it = closure.find(v);
                if (it != closure.end()) pats.insert(it->second.begin(), it->second.end());
            }
        }
    for (const auto& [w, pats] : closure) {
        for (const Permutation& v : pats) CHECK(contains(w, v));
        // transitivity: patterns of patterns are patterns
        for (const Permutation& v : pats)
            if (const auto it = closure.find(v); it != closure.end())
                for (const Permutation& u : it->second) CHECK(pats.count(u) == 1);
    }
    // and containment implies a deletion chain
    for (const auto& [w, pats] : closure)
        for (const auto& [v, unused] : closure)
            if (v.size() <= w.size()) CHECK(contains(w, v) == (pats.count(v) == 1));
}

TEST_CASE("reduced words") {
    CHECK(reduced_words(P("2143")) ==
          std::vector<std::vector<int>>({{1, 3}, {3, 1}}));
    CHECK(reduced_words(P("321")) ==
          std::vector<std::vector<int>>({{1, 2, 1}, {2, 1, 2}}));
    CHECK(reduced_word_count(P("4321")) == 16);
    CHECK(reduced_words(Permutation::identity()) ==
          std::vector<std::vector<int>>({{}}));
    CHECK_THROWS_AS(reduced_word_count(P("4321"), 5), enumeration_limit_error);
}

TEST_CASE("every reduced word is reduced and multiplies back") {
    for (const Permutation& w : {P("243165"), P("321465"), P("4261735")}) {
        const int len = length(w);
        for (const auto& word : reduced_words(w)) {
            CHECK(static_cast<int>(word.size()) == len);
            CHECK(is_reduced_word(word));
            CHECK(word_to_permutation(word) == w);
        }
    }
}

TEST_CASE("shift") {
    CHECK(shift(1, P("21")) == P("132"));
    CHECK(shift(0, P("2143")) == P("2143"));
    CHECK(shift(2, P("2143")) == P("124365"));
}

TEST_CASE("code pattern children") {
    const auto children = code_pattern_children(P("41832567"));
    CHECK(children.count(code_inverse(Code({3, 5, 1}))) == 1);
    CHECK(children.count(P("41832567")) == 1);

    const auto id_children = code_pattern_children(Permutation({1, 2, 3}));
    CHECK(id_children == std::set<Permutation>({Permutation::identity()}));

    const auto self_only = code_pattern_children(P("21"));
    CHECK(self_only == std::set<Permutation>({P("21")}));

    // children preserve the inversion count
    for (const Permutation& w : canonical_up_to(6))
        for (const Permutation& v : code_pattern_children(w)) CHECK(length(v) == length(w));
}
