#pragma once

#include <map>
#include <vector>

#include "stanley/permutation.hpp"
#include "stanley/schur_expansion.hpp"

namespace stanley {

/// Exponent vector -> coefficient, all vectors of length num_vars.
using MonomialMap = std::map<std::vector<int>, long long>;

/// Monomial expansion of F_w in num_vars variables, straight from the
/// defining sum over reduced words a and weakly increasing sequences that
/// rise strictly at every ascent of a.
MonomialMap stanley_monomials(const Permutation& w, int num_vars,
                              unsigned long long word_cap = kDefaultWordCap);

/// Schur decomposition of a symmetric, Schur-positive monomial map by
/// repeatedly peeling the lex-greatest partition exponent. Throws
/// invalid_input when the input is not a nonnegative Schur combination.
SchurExpansion schur_decompose(MonomialMap monomials, int num_vars);

struct OracleBounds {
    int max_length = 12;
    unsigned long long max_words = 1'000'000ULL;
};

/// F_w expanded into Schur functions via the monomial route, in length(w)
/// variables. Refuses oversized inputs with resource_error.
SchurExpansion stanley_via_oracle(const Permutation& w, const OracleBounds& bounds = {});

}  // namespace stanley
