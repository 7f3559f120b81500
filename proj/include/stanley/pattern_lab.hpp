#pragma once

#include <functional>
#include <string>
#include <vector>

#include "stanley/permutation.hpp"
#include "stanley/transition_tree.hpp"

namespace stanley {

/// A pattern-closed boolean property of permutations. The classifiers with a
/// parameter take it in `k`.
struct PredicateSpec {
    enum class Kind { Vexillary, KVex, MultFree, MultBound, Forest, Essential3, EssPath2 };
    Kind kind = Kind::Vexillary;
    long long k = 0;

    std::string name() const;

    /// Accepts "vexillary", "kvex(2)", "multfree", "multbound(3)", "forest",
    /// "essential3", "esspath2".
    static PredicateSpec parse(const std::string& text);

    bool evaluate(const Permutation& w) const;
};

struct ScanReport {
    std::string predicate;
    int max_n = 0;
    std::vector<unsigned long long> counts;  // counts[i] = matching w in S_{i+1}
    std::vector<Permutation> minimal_patterns;
    bool mined = false;
    // Runtime facts; excluded from the canonical serializations so scan
    // output is byte-identical across worker counts.
    int workers = 1;
    double seconds = 0.0;

    std::string to_json() const;
    std::string to_csv() const;
    std::string pattern_lines() const;  // one per line, sorted by (size, lex)
};

inline constexpr int kDefaultScanMax = 10;

/// Counts of predicate-satisfying permutations in S_1..S_max_n. Workers
/// split each S_n into contiguous lexicographic rank blocks; results do not
/// depend on the worker count.
ScanReport classify_all(int max_n, const PredicateSpec& spec, int workers = 1,
                        int hard_max = kDefaultScanMax);

/// Permutations failing the predicate whose one-point deletions all satisfy
/// it, over sizes up to n_max. Runs a closure self-test first and throws
/// predicate_not_closed if the predicate is not pattern-closed on small
/// symmetric groups.
ScanReport minimal_forbidden_patterns(const PredicateSpec& spec, int n_max, int workers = 1,
                                      int closure_check_n = 6);

struct CharacterizationResult {
    bool holds = true;
    unsigned long long checked = 0;
    std::vector<Permutation> counterexamples;  // where pred != avoidance
};

/// Checks pred(w) <=> (w avoids all `patterns`) for every w in S_n, n <= n_check.
CharacterizationResult verify_avoidance_characterization(const PredicateSpec& spec,
                                                         const std::vector<Permutation>& patterns,
                                                         int n_check, int workers = 1);

/// Same equivalence on `samples` pseudorandom elements of S_n (fixed seed,
/// index-addressed, so results do not depend on the worker split).
CharacterizationResult verify_characterization_sampled(const PredicateSpec& spec,
                                                       const std::vector<Permutation>& patterns,
                                                       int n, unsigned long long samples,
                                                       int workers = 1);

struct PositivityReport {
    bool all_positive = true;
    bool multiplicity_free_inherited = true;
    unsigned long long pairs_checked = 0;
    std::vector<std::pair<Permutation, Permutation>> failures;
};

/// For every w in S_n and every code-pattern child v of w: F_w - F_v is a
/// nonnegative Schur combination, and v is multiplicity free whenever w is.
PositivityReport code_pattern_positivity_scan(int n, int workers = 1);

/// Throws predicate_not_closed unless pred(w) implies pred on every
/// one-point deletion of w, for all w in S_m, m <= n_max.
void closure_self_test(const PredicateSpec& spec, int n_max = 6);

/// True iff w contains none of the given patterns.
bool avoids_all(const Permutation& w, const std::vector<Permutation>& patterns);

/// Drives `fn` over all w in S_n split into `workers` lexicographic blocks;
/// fn(block, w) must be thread-safe across blocks.
void for_each_in_sn(int n, int workers,
                    const std::function<void(int, const Permutation&)>& fn);

/// The i-th pseudorandom permutation of S_n for a fixed global seed.
Permutation sampled_permutation(int n, unsigned long long index);

}  // namespace stanley
