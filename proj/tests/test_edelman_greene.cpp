#include "doctest.h"

#include "stanley/edelman_greene.hpp"
#include "stanley/partition.hpp"
#include "stanley/pattern_lab.hpp"
#include "stanley/transition_tree.hpp"

using namespace stanley;

namespace {

Permutation P(const std::string& s) { return Permutation::parse(s); }

void for_each_canonical(int n, const std::function<void(const Permutation&)>& fn) {
    fn(Permutation::identity());
    for (int m = 2; m <= n; ++m)
        for_each_in_sn(m, 1, [&](int, const Permutation& w) {
            if (w.size() == m) fn(w);
        });
}

}  // namespace

TEST_CASE("insertion of single words") {
    const auto [p1, q1] = eg_insert(std::vector<int>{1, 2, 1});
    CHECK(p1.rows == std::vector<std::vector<int>>({{1, 2}, {2}}));
    CHECK(q1.rows == std::vector<std::vector<int>>({{1, 2}, {3}}));

    const auto [p2, q2] = eg_insert(std::vector<int>{2, 1, 2});
    CHECK(p2.rows == std::vector<std::vector<int>>({{1, 2}, {2}}));
    CHECK(q2.rows == std::vector<std::vector<int>>({{1, 3}, {2}}));

    CHECK(eg_insert(std::vector<int>{1, 3}).first.rows ==
          std::vector<std::vector<int>>({{1, 3}}));
    CHECK(eg_insert(std::vector<int>{3, 1}).first.rows ==
          std::vector<std::vector<int>>({{1}, {3}}));

    const auto [pe, qe] = eg_insert(std::vector<int>{});
    CHECK(pe.empty());
    CHECK(qe.rows.empty());

    CHECK_THROWS_AS(eg_insert(std::vector<int>{1, 1}), invalid_input);
    CHECK_THROWS_AS(eg_insert(std::vector<int>{2, 1, 2, 1}), invalid_input);
}

TEST_CASE("tableau sets") {
    const auto t2143 = eg_tableaux(P("2143"));
    REQUIRE(t2143.size() == 2);
    CHECK(t2143[0].shape() == Partition({1, 1}));
    CHECK(t2143[1].shape() == Partition({2}));

    const auto tid = eg_tableaux(Permutation::identity());
    REQUIRE(tid.size() == 1);
    CHECK(tid[0].empty());

    CHECK(eg_tableaux(P("4261735")).size() == 5);
}

TEST_CASE("expansions through insertion") {
    SchurExpansion f2143;
    f2143.add(Partition({2}));
    f2143.add(Partition({1, 1}));
    CHECK(stanley_via_eg(P("2143")) == f2143);

    SchurExpansion f321;
    f321.add(Partition({2, 1}));
    CHECK(stanley_via_eg(P("321")) == f321);

    SchurExpansion f31524;
    f31524.add(Partition({3, 1}));
    f31524.add(Partition({2, 2}));
    CHECK(stanley_via_eg(P("31524")) == f31524);

    CHECK(stanley_via_eg(Permutation::identity()) == SchurExpansion::one());
}

TEST_CASE("insertion tableaux validate") {
    for_each_canonical(5, [&](const Permutation& w) {
        for (const EGTableau& t : eg_tableaux(w)) CHECK(valid_eg_tableau(t, w));
    });
}

TEST_CASE("word counts factor through shapes") {
    for_each_canonical(6, [&](const Permutation& w) {
        std::map<Partition, long long> by_shape;
        for (const EGTableau& t : eg_tableaux(w)) ++by_shape[t.shape()];
        unsigned long long total = 0;
        for (const auto& [shape, count] : by_shape)
            total += static_cast<unsigned long long>(count) * standard_tableaux_count(shape);
        CHECK(total == reduced_word_count(w));
    });
}

TEST_CASE("shift invariance of the tableau shapes") {
    for_each_canonical(6, [&](const Permutation& w) {
        CHECK(stanley_via_eg(w) == stanley_via_eg(shift(1, w)));
    });
}

TEST_CASE("insertion route matches the transition route") {
    for_each_canonical(5, [&](const Permutation& w) {
        CHECK(stanley_via_eg(w) == stanley_via_ls(w));
    });
    // spot checks one size up
    for (unsigned long long i = 0; i < 40; ++i) {
        const Permutation w = sampled_permutation(7, i);
        CHECK(stanley_via_eg(w) == stanley_via_ls(w));
    }
}
