#include "stanley/monomial_oracle.hpp"

#include <algorithm>
#include <functional>

#include "stanley/partition.hpp"

namespace stanley {

MonomialMap stanley_monomials(const Permutation& w, int num_vars,
                              unsigned long long word_cap) {
    if (num_vars <= 0) throw invalid_input("need at least one variable");
    MonomialMap coeffs;
    const int len = length(w);
    if (len == 0) {
        coeffs[std::vector<int>(num_vars, 0)] = 1;
        return coeffs;
    }
    std::vector<int> content(num_vars, 0);
    for_each_reduced_word(
        w,
        [&](std::span<const int> word) {
            // i_1 <= ... <= i_len with i_t < i_{t+1} whenever a_t < a_{t+1}.
            std::function<void(int, int)> place = [&](int t, int lo) {
                if (t == len) {
                    ++coeffs[content];
                    return;
                }
                for (int i = lo; i <= num_vars; ++i) {
                    ++content[i - 1];
                    place(t + 1, t + 1 < len && word[t] < word[t + 1] ? i + 1 : i);
                    --content[i - 1];
                }
            };
            place(0, 1);
            return true;
        },
        word_cap);
    return coeffs;
}

SchurExpansion schur_decompose(MonomialMap monomials, int num_vars) {
    std::erase_if(monomials, [](const auto& kv) { return kv.second == 0; });
    SchurExpansion out;
    while (!monomials.empty()) {
        // Lex-greatest weakly decreasing exponent vector; lex refines
        // dominance, so no other remaining Schur term can reach it.
        const std::vector<int>* lead = nullptr;
        for (const auto& [expo, coeff] : monomials) {
            if (coeff < 0) throw invalid_input("monomial map is not Schur positive");
            if (std::is_sorted(expo.begin(), expo.end(), std::greater<int>()) &&
                (lead == nullptr || expo > *lead))
                lead = &expo;
        }
        if (lead == nullptr)
            throw invalid_input("monomial map has no partition-shaped leading term; "
                                "input is not symmetric");
        std::vector<int> parts(*lead);
        const long long coeff = monomials.at(*lead);
        if (coeff < 0) throw invalid_input("monomial map is not Schur positive");
        std::erase(parts, 0);
        const Partition lambda(std::move(parts));
        out.add(lambda, coeff);
        for (const auto& [expo, count] : schur_polynomial_coeffs(lambda, num_vars)) {
            auto it = monomials.find(expo);
            const long long have = it == monomials.end() ? 0 : it->second;
            const long long rest = have - coeff * count;
            if (rest < 0) throw invalid_input("monomial map is not Schur positive");
            if (rest == 0) {
                if (it != monomials.end()) monomials.erase(it);
            } else {
                monomials[expo] = rest;
            }
        }
    }
    return out;
}

SchurExpansion stanley_via_oracle(const Permutation& w, const OracleBounds& bounds) {
    const int len = length(w);
    if (len > bounds.max_length)
        throw resource_error("oracle expansion limited to length <= " +
                             std::to_string(bounds.max_length) + ", got " +
                             std::to_string(len));
    const unsigned long long words = reduced_word_count(w, bounds.max_words);
    (void)words;  // reduced_word_count throws when the cap is exceeded
    const int num_vars = std::max(len, 1);
    return schur_decompose(stanley_monomials(w, num_vars), num_vars);
}

}  // namespace stanley
