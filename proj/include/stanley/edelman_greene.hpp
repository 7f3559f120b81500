#pragma once

#include <compare>
#include <string>
#include <vector>

#include "stanley/partition.hpp"
#include "stanley/permutation.hpp"
#include "stanley/schur_expansion.hpp"

namespace stanley {

/// Row- and column-strict tableau whose column word (read up each column,
/// leftmost column first) is a reduced word.
struct EGTableau {
    std::vector<std::vector<int>> rows;

    Partition shape() const;
    std::vector<int> column_word() const;
    bool empty() const { return rows.empty(); }

    auto operator<=>(const EGTableau&) const = default;

    std::string str() const;  // one row per line
};

/// Standard filling 1..l recording the growth of its insertion tableau.
struct RecordingTableau {
    std::vector<std::vector<int>> rows;

    auto operator<=>(const RecordingTableau&) const = default;
};

/// Coxeter-Knuth insertion of a reduced word. Bumping replaces the smallest
/// entry larger than the inserted letter; when a row contains both a and
/// a+1 and a arrives, the row is left unchanged and a+1 is carried to the
/// next row. Throws invalid_input on non-reduced input.
std::pair<EGTableau, RecordingTableau> eg_insert(std::span<const int> word);

/// Distinct insertion tableaux over all reduced words of w, sorted.
std::vector<EGTableau> eg_tableaux(const Permutation& w,
                                   unsigned long long cap = kDefaultWordCap);

/// F_w as the multiset of conjugated shapes of the insertion tableaux.
SchurExpansion stanley_via_eg(const Permutation& w,
                              unsigned long long cap = kDefaultWordCap);

/// Strict rows and columns, and the column word is a reduced word for w.
bool valid_eg_tableau(const EGTableau& t, const Permutation& w);

}  // namespace stanley
