#include "doctest.h"

#include <set>

#include "stanley/edelman_greene.hpp"
#include "stanley/pattern_lab.hpp"
#include "stanley/transition_tree.hpp"

using namespace stanley;

namespace {

Permutation P(const std::string& s) { return Permutation::parse(s); }

std::vector<Permutation> parse_all(const std::vector<std::string>& texts) {
    std::vector<Permutation> out;
    for (const auto& t : texts) out.push_back(P(t));
    return out;
}

}  // namespace

TEST_CASE("predicate specs") {
    CHECK(PredicateSpec::parse("vexillary").name() == "vexillary");
    CHECK(PredicateSpec::parse("kvex(2)").k == 2);
    CHECK(PredicateSpec::parse("kvex2").k == 2);
    CHECK(PredicateSpec::parse("multbound(3)").name() == "multbound(3)");
    CHECK_THROWS_AS(PredicateSpec::parse("unknown"), invalid_input);
    CHECK_THROWS_AS(PredicateSpec::parse("kvex()"), invalid_input);
}

TEST_CASE("vexillary counts against a direct avoidance count") {
    const ScanReport report =
        classify_all(5, PredicateSpec{PredicateSpec::Kind::Vexillary, 0});
    CHECK(report.counts == std::vector<unsigned long long>({1, 2, 6, 23, 103}));

    // independent route: count 2143-avoiders by generic containment
    const Permutation pat = P("2143");
    for (int n = 1; n <= 5; ++n) {
        unsigned long long direct = 0;
        for_each_in_sn(n, 1, [&](int, const Permutation& w) {
            if (!contains(w, pat)) ++direct;
        });
        CHECK(direct == report.counts[n - 1]);
    }
}

TEST_CASE("classifier counts agree with per-permutation recomputation") {
    const ScanReport mf = classify_all(5, PredicateSpec{PredicateSpec::Kind::MultFree, 0});
    for (int n = 1; n <= 5; ++n) {
        unsigned long long direct = 0;
        for_each_in_sn(n, 1, [&](int, const Permutation& w) {
            if (stanley_via_eg(w).max_multiplicity() <= 1) ++direct;
        });
        CHECK(direct == mf.counts[n - 1]);
    }
}

TEST_CASE("scan guards") {
    CHECK_THROWS_AS(classify_all(11, PredicateSpec{PredicateSpec::Kind::Vexillary, 0}),
                    resource_error);
    CHECK_THROWS_AS(classify_all(0, PredicateSpec{PredicateSpec::Kind::Vexillary, 0}),
                    invalid_input);
}

TEST_CASE("mining minimal patterns") {
    const ScanReport vex =
        minimal_forbidden_patterns(PredicateSpec{PredicateSpec::Kind::Vexillary, 0}, 6);
    CHECK(vex.minimal_patterns == std::vector<Permutation>({P("2143")}));

    const ScanReport forest =
        minimal_forbidden_patterns(PredicateSpec{PredicateSpec::Kind::Forest, 0}, 6);
    CHECK(forest.minimal_patterns ==
          parse_all({"3412", "3421", "4312", "4321"}));

    const ScanReport kvex2 =
        minimal_forbidden_patterns(PredicateSpec{PredicateSpec::Kind::KVex, 2}, 6);
    CHECK(kvex2.minimal_patterns ==
          parse_all({"21543", "32154", "214365", "214635", "215364", "231564", "241365",
                     "241635", "312645", "314265", "315264", "426153"}));

    // minimal pattern sets are antichains
    for (const ScanReport* r : {&vex, &forest, &kvex2})
        for (const Permutation& a : r->minimal_patterns)
            for (const Permutation& b : r->minimal_patterns)
                if (!(a == b)) CHECK_FALSE(contains(a, b));
}

TEST_CASE("closure self-test rejects a non-closed predicate") {
    // esspath2 and essential3 are closed; pattern lists characterize them
    closure_self_test(PredicateSpec{PredicateSpec::Kind::Essential3, 0}, 5);
    closure_self_test(PredicateSpec{PredicateSpec::Kind::EssPath2, 0}, 5);
    closure_self_test(PredicateSpec{PredicateSpec::Kind::MultBound, 2}, 5);
}

TEST_CASE("the two essential-set routes agree") {
    const PredicateSpec a{PredicateSpec::Kind::Essential3, 0};
    const PredicateSpec b{PredicateSpec::Kind::EssPath2, 0};
    for (int n = 1; n <= 7; ++n)
        for_each_in_sn(n, 1, [&](int, const Permutation& w) {
            CHECK(a.evaluate(w) == b.evaluate(w));
        });
}

TEST_CASE("avoidance characterization") {
    const auto vex_chr = verify_avoidance_characterization(
        PredicateSpec{PredicateSpec::Kind::Vexillary, 0}, {P("2143")}, 8);
    CHECK(vex_chr.holds);

    // wrong pattern list produces counterexamples
    const auto broken = verify_avoidance_characterization(
        PredicateSpec{PredicateSpec::Kind::Vexillary, 0}, {P("1234")}, 4);
    CHECK_FALSE(broken.holds);
    CHECK(!broken.counterexamples.empty());
}

TEST_CASE("sampled characterization is deterministic") {
    const auto a = verify_characterization_sampled(
        PredicateSpec{PredicateSpec::Kind::Vexillary, 0}, {P("2143")}, 9, 5000, 1);
    const auto b = verify_characterization_sampled(
        PredicateSpec{PredicateSpec::Kind::Vexillary, 0}, {P("2143")}, 9, 5000, 4);
    CHECK(a.holds);
    CHECK(b.holds);
    CHECK(a.checked == b.checked);
    CHECK(sampled_permutation(9, 123) == sampled_permutation(9, 123));
}

TEST_CASE("code pattern positivity") {
    const PositivityReport r4 = code_pattern_positivity_scan(4);
    CHECK(r4.all_positive);
    CHECK(r4.multiplicity_free_inherited);
    CHECK(r4.pairs_checked > 0);

    // the worked example: every child of 41832567 embeds positively
    const Permutation w = P("41832567");
    const SchurExpansion fw = stanley_via_ls(w);
    for (const Permutation& v : code_pattern_children(w)) {
        const auto diff = SchurExpansion::try_subtract(fw, stanley_via_ls(v));
        CHECK(diff.has_value());
    }
}

TEST_CASE("reports serialize deterministically") {
    const PredicateSpec spec{PredicateSpec::Kind::Vexillary, 0};
    const ScanReport a = classify_all(5, spec, 1);
    const ScanReport b = classify_all(5, spec, 3);
    CHECK(a.to_json() == b.to_json());
    CHECK(a.to_csv() == b.to_csv());
    CHECK(a.to_json().find("seconds") == std::string::npos);
    CHECK(a.to_json().find("workers") == std::string::npos);

    const ScanReport m1 =
        minimal_forbidden_patterns(PredicateSpec{PredicateSpec::Kind::Forest, 0}, 5, 1);
    const ScanReport m3 =
        minimal_forbidden_patterns(PredicateSpec{PredicateSpec::Kind::Forest, 0}, 5, 3);
    CHECK(m1.pattern_lines() == m3.pattern_lines());
    CHECK(m1.to_json() == m3.to_json());
}
