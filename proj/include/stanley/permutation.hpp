#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "stanley/errors.hpp"

namespace stanley {

/// A permutation of {1..n} in one-line notation, stored in canonical form:
/// trailing fixed points are trimmed, so S_n embeds in S_{n+1} and the empty
/// permutation is the identity. Values beyond size() are fixed points.
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(std::vector<int> oneline);

    static Permutation identity() { return Permutation{}; }

    int size() const { return static_cast<int>(oneline_.size()); }
    bool is_identity() const { return oneline_.empty(); }

    /// w(i) for any i >= 1; positions beyond the canonical size are fixed.
    int operator()(int i) const {
        return i <= size() ? oneline_[i - 1] : i;
    }

    /// w^{-1}(value), valid for any value >= 1.
    int position_of(int value) const;

    const std::vector<int>& oneline() const { return oneline_; }

    auto operator<=>(const Permutation&) const = default;

    /// Compact digits for n <= 9, space-delimited otherwise; "id" when empty.
    std::string str() const;

    /// Accepts compact digits ("243165", n <= 9 only), space- or
    /// comma-delimited values, and "id". Reports the offending position.
    static Permutation parse(const std::string& text);

private:
    std::vector<int> oneline_;
};

/// Weakly ordered row counts of inversions; c_k <= n-k when taken from S_n.
struct Code {
    std::vector<int> entries;

    Code() = default;
    explicit Code(std::vector<int> e);

    auto operator<=>(const Code&) const = default;
};

/// Number of inversions = minimal word length.
int length(const Permutation& w);

/// c_k = #{j > k : w(j) < w(k)}.
Code code(const Permutation& w);

/// The unique permutation whose code is `c` up to trailing zeros.
Permutation code_inverse(const Code& c);

/// Order-isomorphic permutation of a sequence of distinct integers.
Permutation flatten(std::span<const int> values);

/// 1^m x w: prepend m fixed points, shift everything up by m.
Permutation shift(int m, const Permutation& w);

/// Right product w * t_{ij}: swaps the entries in positions i and j.
Permutation apply_transposition(const Permutation& w, int i, int j);

/// True iff some subsequence of w flattens to v. Canonical-form semantics:
/// the pattern is v's trimmed one-line word, so identity-like patterns of
/// any nominal size are contained in everything.
bool contains(const Permutation& w, const Permutation& v);

/// Word-level containment: some subsequence of w, of the word's full
/// length, is order-isomorphic to the given word (entries distinct). This
/// distinguishes the pattern 1234 from the identity.
bool contains(const Permutation& w, std::span<const int> pattern_word);

/// Specialized containment test for the pattern 2143, O(n^2).
bool contains_2143(const Permutation& w);

/// Position tuples (increasing) at which the pattern occurs in w, up to
/// max_count. Same canonical-form semantics as contains.
std::vector<std::vector<int>> occurrences(const Permutation& w, const Permutation& v,
                                          std::size_t max_count = SIZE_MAX);
std::vector<std::vector<int>> occurrences(const Permutation& w,
                                          std::span<const int> pattern_word,
                                          std::size_t max_count = SIZE_MAX);

/// Patterns obtained by deleting one position and flattening.
std::vector<Permutation> one_point_deletions(const Permutation& w);

inline constexpr unsigned long long kDefaultWordCap = 10'000'000ULL;

/// All reduced words of w, sorted lexicographically.
/// Throws enumeration_limit_error if more than `cap` words exist.
std::vector<std::vector<int>> reduced_words(const Permutation& w,
                                            unsigned long long cap = kDefaultWordCap);

/// |Red(w)| by direct enumeration (no storage).
unsigned long long reduced_word_count(const Permutation& w,
                                      unsigned long long cap = kDefaultWordCap);

/// Visits each reduced word once; stops early if fn returns false.
void for_each_reduced_word(const Permutation& w,
                           const std::function<bool(std::span<const int>)>& fn,
                           unsigned long long cap = kDefaultWordCap);

/// Checks that s_{a_1} ... s_{a_k} is length-increasing at every step.
bool is_reduced_word(std::span<const int> word);

/// Product s_{a_1} ... s_{a_k} as a permutation.
Permutation word_to_permutation(std::span<const int> word);

/// For each zero entry of code(w) (with one trailing zero appended), the
/// permutation whose code drops that entry. Every child v has l(v) = l(w).
std::set<Permutation> code_pattern_children(const Permutation& w);

}  // namespace stanley

template <>
struct std::hash<stanley::Permutation> {
    std::size_t operator()(const stanley::Permutation& w) const noexcept {
        std::size_t h = 1469598103934665603ULL;
        for (int v : w.oneline()) {
            h ^= static_cast<std::size_t>(v);
            h *= 1099511628211ULL;
        }
        return h;
    }
};
