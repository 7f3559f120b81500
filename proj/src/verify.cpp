#include "stanley/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <fstream>
#include <functional>
#include <map>
#include <mutex>
#include <set>

#include "stanley/diagram.hpp"
#include "stanley/edelman_greene.hpp"
#include "stanley/jp_tree.hpp"
#include "stanley/monomial_oracle.hpp"
#include "stanley/pattern_lab.hpp"
#include "stanley/schur_expansion.hpp"
#include "stanley/transition_tree.hpp"

namespace stanley {

std::vector<Permutation> load_pattern_fixture(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw invalid_input("cannot open pattern fixture " + path);
    std::vector<Permutation> out;
    std::string line;
    while (std::getline(in, line)) {
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        out.push_back(Permutation::parse(line));
    }
    return out;
}

namespace {

struct Timer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    }
};

SuiteResult finish(const std::string& name, const Timer& timer, bool pass,
                   const std::string& detail) {
    return {name, pass, detail, timer.seconds()};
}

// First failure across worker threads, with a cheap atomic early-exit flag.
struct FailureCollector {
    std::atomic<bool> failed{false};
    std::mutex mu;
    std::string first;

    void record(const std::string& msg) {
        failed.store(true);
        std::scoped_lock lock(mu);
        if (first.empty()) first = msg;
    }
    bool any() const { return failed.load(); }
    std::string message() {
        std::scoped_lock lock(mu);
        return first;
    }
};

// Canonical permutations of every size up to and including n.
void for_each_canonical_up_to(int n, int workers,
                              const std::function<void(const Permutation&)>& fn) {
    for (int m = 1; m <= n; ++m)
        for_each_in_sn(m, workers, [&](int, const Permutation& w) {
            if (w.size() == m || (m == 1 && w.is_identity())) fn(w);
        });
}

// Maximum matching (augmenting paths) used for the Hall-condition route.
struct BipartiteMatcher {
    int left = 0, right = 0;
    std::vector<std::vector<int>> adj;

    explicit BipartiteMatcher(int l, int r) : left(l), right(r), adj(l) {}
    void add_edge(int a, int b) { adj[a].push_back(b); }

    int max_matching() const {
        std::vector<int> match_right(right, -1);
        int matched = 0;
        std::vector<char> visited(right);
        std::function<bool(int)> grow = [&](int a) {
            for (int b : adj[a]) {
                if (visited[b]) continue;
                visited[b] = 1;
                if (match_right[b] < 0 || grow(match_right[b])) {
                    match_right[b] = a;
                    return true;
                }
            }
            return false;
        };
        for (int a = 0; a < left; ++a) {
            std::fill(visited.begin(), visited.end(), 0);
            if (grow(a)) ++matched;
        }
        return matched;
    }
};

std::string fixture_path(const VerifyOptions& opt, const char* file) {
    if (opt.fixture_dir.empty())
        throw invalid_input("this suite needs --fixtures pointing at the pattern lists");
    return opt.fixture_dir + "/" + file;
}

}  // namespace

SuiteResult verify_three_route(const VerifyOptions& opt) {
    Timer timer;
    const int full_n = opt.max_n > 0 ? opt.max_n : 6;
    const int oracle_n = std::min(full_n, 5);
    std::atomic<unsigned long long> checked{0};
    FailureCollector fail;
    for_each_canonical_up_to(full_n, opt.workers, [&](const Permutation& w) {
        if (fail.any()) return;
        const SchurExpansion ls = stanley_via_ls(w);
        const SchurExpansion eg = stanley_via_eg(w);
        bool ok = ls == eg;
        if (ok && w.size() <= oracle_n) ok = ls == stanley_via_oracle(w);
        ++checked;
        if (!ok) fail.record("routes disagree at w = " + w.str());
    });
    return finish("three-route", timer, !fail.any(),
                  !fail.any() ? "ls/eg agree through S_" + std::to_string(full_n) +
                                    ", oracle through S_" + std::to_string(oracle_n) + " (" +
                                    std::to_string(checked.load()) + " permutations)"
                              : fail.message());
}

SuiteResult verify_word_count_identity(const VerifyOptions& opt) {
    Timer timer;
    const int n = opt.max_n > 0 ? opt.max_n : 6;
    std::atomic<unsigned long long> checked{0};
    std::atomic<unsigned long long> biggest{0};
    FailureCollector fail;
    for_each_canonical_up_to(n, opt.workers, [&](const Permutation& w) {
        if (fail.any()) return;
        const unsigned long long direct = reduced_word_count(w);
        unsigned long long via_hooks = 0;
        const SchurExpansion f = stanley_via_ls(w);
        for (const auto& [shape, mult] : f.terms())
            via_hooks += static_cast<unsigned long long>(mult) * standard_tableaux_count(shape);
        ++checked;
        unsigned long long prev = biggest.load();
        while (direct > prev && !biggest.compare_exchange_weak(prev, direct)) {}
        if (direct != via_hooks) fail.record("word count mismatch at w = " + w.str());
    });
    return finish("redwords", timer, !fail.any(),
                  !fail.any() ? "|Red(w)| matches hook-length counts through S_" +
                                    std::to_string(n) + " (largest enumeration " +
                                    std::to_string(biggest.load()) + " words)"
                              : fail.message());
}

SuiteResult verify_golden_examples(const VerifyOptions&) {
    Timer timer;
    std::vector<std::string> problems;
    auto expect = [&](bool ok, const std::string& what) {
        if (!ok) problems.push_back(what);
    };

    {  // the five-node transition tree
        const LSTree tree = ls_tree(Permutation::parse("321465"));
        bool shape_ok = tree.root.children.size() == 1 && !tree.root.leaf();
        const LSNode& mid = tree.root.children.empty() ? tree.root : tree.root.children[0];
        shape_ok = shape_ok && mid.perm == Permutation::parse("321546") &&
                   mid.children.size() == 3;
        std::set<Permutation> leaves;
        for (const LSNode& child : mid.children) {
            shape_ok = shape_ok && child.leaf();
            leaves.insert(child.perm);
        }
        const std::set<Permutation> want = {Permutation::parse("421356"),
                                            Permutation::parse("341256"),
                                            Permutation::parse("324156")};
        expect(shape_ok && leaves == want, "transition tree of 321465");
    }

    expect(stanley_via_ls(Permutation::parse("316524")).str() ==
               "s[3,2,2] + s[3,3,1] + s[4,2,1]",
           "F_316524 expansion");

    {  // the block-split injection values
        const auto iota = iota_shapes(rothe(Permutation::parse("316524")), {1, 2, 3},
                                      {1, 2, 3, 4});
        const Partition l31({3, 1}), l22({2, 2});
        const Partition want421({4, 2, 1}), want322({3, 2, 2});
        expect(iota.size() == 2 && iota.count({l31, Partition{}}) &&
                   iota.at({l31, Partition{}}) == want421 &&
                   iota.count({l22, Partition{}}) && iota.at({l22, Partition{}}) == want322,
               "iota values for 316524");
    }

    {  // five insertion tableaux and the matching expansion
        const Permutation w = Permutation::parse("4261735");
        expect(stanley_via_ls(w).str() ==
                   "s[3,3,2,1] + s[3,3,3] + s[4,2,2,1] + s[4,3,1,1] + s[4,3,2]",
               "F_4261735 expansion");
        const auto tabs = eg_tableaux(w);
        std::set<std::vector<std::vector<int>>> got;
        for (const EGTableau& t : tabs) got.insert(t.rows);
        const std::set<std::vector<std::vector<int>>> want = {
            {{1, 2, 3}, {2, 4, 5}, {3, 5, 6}},
            {{1, 2, 3}, {2, 4, 5}, {3, 6}, {5}},
            {{1, 2, 3, 5}, {2, 4}, {3, 6}, {5}},
            {{1, 2, 3, 5}, {2, 4, 6}, {3}, {5}},
            {{1, 2, 3, 5}, {2, 4, 6}, {3, 5}}};
        expect(got == want, "insertion tableaux of 4261735");
        expect(eg_number(w) == 5, "EG(4261735) = 5");
    }

    {  // code round trip
        const Permutation w = code_inverse(Code({3, 0, 5, 1}));
        expect(w == Permutation::parse("41832567"), "code_inverse(3,0,5,1)");
        expect(code(Permutation::parse("41832567")).entries ==
                   std::vector<int>({3, 0, 5, 1, 0, 0, 0, 0}),
               "code(41832567)");
    }

    std::string detail = "tree of 321465, F_316524 with iota values, F_4261735 with its "
                         "5 tableaux, code round trip";
    if (!problems.empty()) {
        detail = "failed:";
        for (const auto& p : problems) detail += " [" + p + "]";
    }
    return finish("golden", timer, problems.empty(), detail);
}

namespace {

SuiteResult verify_kvex_list(const char* suite_name, long long k, const char* fixture_file,
                             int expected_count, const VerifyOptions& opt) {
    Timer timer;
    const PredicateSpec spec{PredicateSpec::Kind::KVex, k};
    const int mine_to = 8;
    const int verify_to = opt.max_n > 0 ? opt.max_n : 9;

    const std::vector<Permutation> fixture =
        load_pattern_fixture(fixture_path(opt, fixture_file));
    if (static_cast<int>(fixture.size()) != expected_count)
        return finish(suite_name, timer, false,
                      "fixture has " + std::to_string(fixture.size()) + " patterns, expected " +
                          std::to_string(expected_count));

    const ScanReport mined = minimal_forbidden_patterns(spec, mine_to, opt.workers);
    std::string fixture_lines;
    for (const Permutation& p : fixture) fixture_lines += p.str() + "\n";
    if (mined.pattern_lines() != fixture_lines)
        return finish(suite_name, timer, false,
                      "mined minimal patterns differ from the fixture (" +
                          std::to_string(mined.minimal_patterns.size()) + " mined)");

    const CharacterizationResult full =
        verify_avoidance_characterization(spec, fixture, verify_to, opt.workers);
    if (!full.holds)
        return finish(suite_name, timer, false,
                      "avoidance characterization fails, first counterexample " +
                          full.counterexamples.front().str());

    std::string detail = std::to_string(expected_count) + " minimal patterns reproduced, " +
                         "equivalence exhaustive through S_" + std::to_string(verify_to);

    if (k == 3) {
        const unsigned long long per_n = opt.samples > 0 ? opt.samples : 600'000ULL;
        for (int n : {10, 11}) {
            const CharacterizationResult sampled =
                verify_characterization_sampled(spec, fixture, n, per_n, opt.workers);
            if (!sampled.holds)
                return finish(suite_name, timer, false,
                              "sampled counterexample in S_" + std::to_string(n) + ": " +
                                  sampled.counterexamples.front().str());
        }
        detail += ", plus " + std::to_string(2 * (opt.samples > 0 ? opt.samples : 600'000ULL)) +
                  " samples in S_10/S_11";
    }
    return finish(suite_name, timer, true, detail);
}

}  // namespace

SuiteResult verify_two_vexillary(const VerifyOptions& opt) {
    return verify_kvex_list("two-vex", 2, "patterns_2vex.txt", 35, opt);
}

SuiteResult verify_three_vexillary(const VerifyOptions& opt) {
    return verify_kvex_list("three-vex", 3, "patterns_3vex.txt", 91, opt);
}

SuiteResult verify_forest(const VerifyOptions& opt) {
    Timer timer;
    const int n = opt.max_n > 0 ? opt.max_n : 8;
    const std::vector<Permutation> forbidden = {
        Permutation::parse("3412"), Permutation::parse("3421"), Permutation::parse("4312"),
        Permutation::parse("4321")};
    std::atomic<unsigned long long> checked{0};
    FailureCollector fail;
    for (int m = 1; m <= n; ++m)
        for_each_in_sn(m, opt.workers, [&](int, const Permutation& w) {
            if ((w.size() < m && m > 1) || fail.any()) return;
            ++checked;
            if (graph_is_forest(rothe(w)) != avoids_all(w, forbidden))
                fail.record("forest equivalence fails at " + w.str());
        });
    return finish("forest", timer, !fail.any(),
                  !fail.any() ? "forest <=> 4-pattern avoidance on " +
                                    std::to_string(checked.load()) +
                                    " permutations through S_" + std::to_string(n)
                              : fail.message());
}

SuiteResult verify_essential(const VerifyOptions& opt) {
    Timer timer;
    const int n = opt.max_n > 0 ? opt.max_n : 8;
    const std::vector<Permutation> patterns =
        load_pattern_fixture(fixture_path(opt, "patterns_essential.txt"));
    if (patterns.size() != 25)
        return finish("essential", timer, false,
                      "fixture has " + std::to_string(patterns.size()) + " patterns, expected 25");
    const PredicateSpec spec{PredicateSpec::Kind::Essential3, 0};
    const CharacterizationResult res =
        verify_avoidance_characterization(spec, patterns, n, opt.workers);
    if (!res.holds)
        return finish("essential", timer, false,
                      "equivalence fails at " + res.counterexamples.front().str());

    // Side checks at the same scale: 3-term-bounded expansions are
    // multiplicity free and have 3-chain-free essential sets.
    FailureCollector fail;
    for (int m = 1; m <= n; ++m)
        for_each_in_sn(m, opt.workers, [&](int, const Permutation& w) {
            if ((w.size() < m && m > 1) || fail.any()) return;
            if (!is_k_vexillary(w, 3)) return;
            if (!multiplicity_bounded_by(w, 1) || !spec.evaluate(w))
                fail.record("3-term consequence fails at " + w.str());
        });
    return finish("essential", timer, !fail.any(),
                  !fail.any() ? "25-pattern equivalence and 3-term consequences hold through S_" +
                                    std::to_string(n)
                              : fail.message());
}

SuiteResult verify_shape_injection(const VerifyOptions& opt) {
    Timer timer;
    const int pair_n = opt.max_n > 0 ? std::min(opt.max_n, 6) : 6;
    const int dominance_n = opt.max_n > 0 ? opt.max_n : 7;

    FailureCollector fail;
    auto record = [&](const std::string& msg) { fail.record(msg); };
    std::atomic<unsigned long long> pairs{0};

    for (int m = 1; m <= pair_n; ++m)
        for_each_in_sn(m, opt.workers, [&](int, const Permutation& w) {
            if ((w.size() < m && m > 1) || fail.any()) return;
            const SchurExpansion fw = stanley_via_ls(w);
            const Diagram dw = rothe(w);
            // Every subset of positions is an occurrence of the pattern it flattens to.
            for (unsigned mask = 1; mask < (1u << m); ++mask) {
                std::vector<int> positions, values;
                for (int i = 1; i <= m; ++i)
                    if (mask & (1u << (i - 1))) {
                        positions.push_back(i);
                        values.push_back(w(i));
                    }
                const Permutation v = flatten(values);
                const SchurExpansion fv = stanley_via_ls(v);
                ++pairs;

                if (subdiagram(dw, positions, values).reindexed != rothe(v)) {
                    record("occurrence subdiagram is not the pattern diagram at w = " +
                           w.str());
                    return;
                }
                std::map<Partition, Partition> iota;
                try {
                    iota = iota_injection(dw, positions, values);
                } catch (const unsupported_subdiagram&) {
                    record("pattern block unsupported at w = " + w.str());
                    return;
                }
                std::set<Partition> images;
                for (const auto& [lambda, mult] : fv.terms()) {
                    const auto it = iota.find(lambda);
                    if (it == iota.end()) {
                        record("iota missing a shape at w = " + w.str());
                        return;
                    }
                    const Partition& image = it->second;
                    if (!image.contains(lambda) || fw.multiplicity(image) < mult ||
                        !images.insert(image).second) {
                        record("iota fails at w = " + w.str() + ", v = " + v.str());
                        return;
                    }
                }
                // Independent route: containment-respecting matching must
                // saturate the pattern's shape multiset.
                std::vector<Partition> small, big;
                for (const auto& [shape, mult] : fv.terms())
                    for (long long i = 0; i < mult; ++i) small.push_back(shape);
                for (const auto& [shape, mult] : fw.terms())
                    for (long long i = 0; i < mult; ++i) big.push_back(shape);
                BipartiteMatcher matcher(static_cast<int>(small.size()),
                                         static_cast<int>(big.size()));
                for (std::size_t a = 0; a < small.size(); ++a)
                    for (std::size_t b = 0; b < big.size(); ++b)
                        if (big[b].contains(small[a]))
                            matcher.add_edge(static_cast<int>(a), static_cast<int>(b));
                if (matcher.max_matching() != static_cast<int>(small.size())) {
                    record("no containment matching at w = " + w.str() + ", v = " + v.str());
                    return;
                }
            }
        });
    if (fail.any()) return finish("injection", timer, false, fail.message());

    for (int m = 1; m <= dominance_n; ++m)
        for_each_in_sn(m, opt.workers, [&](int, const Permutation& w) {
            if ((w.size() < m && m > 1) || fail.any()) return;
            const SchurExpansion fw = stanley_via_ls(w);
            const Diagram dw = rothe(w);
            const Partition lo = d_min(dw), hi = d_max(dw);
            for (const auto& [shape, mult] : fw.terms())
                if (!dominance_leq(lo, shape) || !dominance_leq(shape, hi)) {
                    record("dominance bound fails at " + w.str());
                    return;
                }
            if (fw.multiplicity(lo) != 1 || fw.multiplicity(hi) != 1)
                record("extreme multiplicity is not one at " + w.str());
        });
    return finish("injection", timer, !fail.any(),
                  !fail.any() ? "shape injection on " + std::to_string(pairs.load()) +
                                    " occurrences through S_" + std::to_string(pair_n) +
                                    ", dominance bounds through S_" +
                                    std::to_string(dominance_n)
                              : fail.message());
}

SuiteResult verify_skeleton_witness(const VerifyOptions& opt) {
    Timer timer;
    const int n = opt.max_n > 0 ? opt.max_n : 7;
    const long long kmax = 4;
    FailureCollector fail;
    auto record = [&](const std::string& msg) { fail.record(msg); };
    std::atomic<unsigned long long> checked{0};
    for (int m = 1; m <= n; ++m)
        for_each_in_sn(m, opt.workers, [&](int, const Permutation& w) {
            if ((w.size() < m && m > 1) || fail.any()) return;
            ++checked;
            const long long eg = eg_number(w);
            const Permutation sk = skeleton_pattern(w);
            if (eg_number(sk) != eg || sk.size() > std::max(0LL, 4 * eg - 4) ||
                !contains(w, sk)) {
                record("skeleton fails at " + w.str());
                return;
            }
            for (long long k = 1; k <= kmax; ++k) {
                const auto wit = witness_pattern(w, k);
                if (eg <= k) {
                    if (wit) record("unexpected witness at " + w.str());
                } else if (!wit || wit->size() > 4 * k || eg_number(*wit) <= k ||
                           !contains(w, *wit)) {
                    record("witness fails at " + w.str() + ", k = " + std::to_string(k));
                }
                if (fail.any()) return;
            }
        });
    return finish("skeleton", timer, !fail.any(),
                  !fail.any() ? "skeleton and witness bounds hold for " +
                                    std::to_string(checked.load()) +
                                    " permutations through S_" + std::to_string(n) + ", k <= 4"
                              : fail.message());
}

SuiteResult verify_code_patterns(const VerifyOptions& opt) {
    Timer timer;
    const int n = opt.max_n > 0 ? opt.max_n : 7;
    PositivityReport last;
    for (int m = 1; m <= n; ++m) {
        PositivityReport r = code_pattern_positivity_scan(m, opt.workers);
        last.pairs_checked += r.pairs_checked;
        last.all_positive = last.all_positive && r.all_positive;
        last.multiplicity_free_inherited =
            last.multiplicity_free_inherited && r.multiplicity_free_inherited;
        for (auto& f : r.failures) last.failures.push_back(f);
    }
    const bool pass = last.all_positive && last.multiplicity_free_inherited;
    return finish("code-patterns", timer, pass,
                  pass ? "Schur positive differences and multiplicity-free inheritance on " +
                             std::to_string(last.pairs_checked) + " pairs through S_" +
                             std::to_string(n)
                       : "failure at w = " + last.failures.front().first.str() + ", v = " +
                             last.failures.front().second.str());
}

SuiteResult verify_determinism(const VerifyOptions& opt) {
    Timer timer;
    const int scan_n = opt.max_n > 0 ? opt.max_n : 6;
    std::vector<int> worker_counts = {1, 4, 8};
    bool ok = true;
    std::string detail = "scan, mining, and tree output byte-identical for workers 1/4/8";

    std::string scan_json, scan_csv, mined_lines, tree_json, tree_dot;
    for (int workers : worker_counts) {
        const ScanReport scan =
            classify_all(scan_n, PredicateSpec{PredicateSpec::Kind::Vexillary, 0}, workers);
        const ScanReport mined =
            minimal_forbidden_patterns(PredicateSpec{PredicateSpec::Kind::KVex, 2},
                                       std::min(scan_n, 6), workers);
        const LSTree tree = ls_tree(Permutation::parse("321546"), {}, workers);
        const std::string tj = lstree_json(tree), td = lstree_dot(tree);
        if (workers == worker_counts.front()) {
            scan_json = scan.to_json();
            scan_csv = scan.to_csv();
            mined_lines = mined.pattern_lines();
            tree_json = tj;
            tree_dot = td;
        } else if (scan.to_json() != scan_json || scan.to_csv() != scan_csv ||
                   mined.pattern_lines() != mined_lines || tj != tree_json ||
                   td != tree_dot) {
            ok = false;
            detail = "output differs at workers = " + std::to_string(workers);
            break;
        }
    }
    return finish("determinism", timer, ok, detail);
}

std::vector<SuiteResult> run_verify_suite(const std::string& name, const VerifyOptions& opt) {
    using Runner = SuiteResult (*)(const VerifyOptions&);
    static const std::vector<std::pair<std::string, Runner>> table = {
        {"three-route", verify_three_route}, {"redwords", verify_word_count_identity},
        {"golden", verify_golden_examples},  {"two-vex", verify_two_vexillary},
        {"three-vex", verify_three_vexillary}, {"forest", verify_forest},
        {"essential", verify_essential},     {"injection", verify_shape_injection},
        {"skeleton", verify_skeleton_witness}, {"code-patterns", verify_code_patterns},
        {"determinism", verify_determinism},
    };
    std::vector<SuiteResult> results;
    if (name == "all") {
        for (const auto& [n, fn] : table) results.push_back(fn(opt));
        return results;
    }
    for (const auto& [n, fn] : table)
        if (n == name) {
            results.push_back(fn(opt));
            return results;
        }
    throw invalid_input("unknown verify suite \"" + name + "\"");
}

}  // namespace stanley
