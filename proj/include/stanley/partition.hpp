#pragma once

#include <compare>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "stanley/errors.hpp"

namespace stanley {

/// Weakly decreasing positive parts; the empty partition is allowed.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    /// Sorts descending and drops zeros; convenience for raw count vectors.
    static Partition sorted(std::vector<int> values);

    int size() const;                 // |lambda| = sum of parts
    int rows() const { return static_cast<int>(parts_.size()); }
    int part(int i) const {           // 1-based, zero beyond the last row
        return i <= rows() ? parts_[i - 1] : 0;
    }
    bool empty() const { return parts_.empty(); }
    const std::vector<int>& parts() const { return parts_; }

    /// mu fits inside lambda cellwise.
    bool contains(const Partition& mu) const;

    auto operator<=>(const Partition&) const = default;

    std::string str() const;  // "(4,2,1)", "()" when empty
    static Partition parse(const std::string& text);

private:
    std::vector<int> parts_;
};

Partition conjugate(const Partition& lambda);

/// Multiset union of parts.
Partition union_parts(const Partition& lambda, const Partition& mu);

/// Entrywise sum, padding with zeros.
Partition sum_parts(const Partition& lambda, const Partition& mu);

/// Dominance order on partitions of equal size (prefix-sum comparison).
/// Throws invalid_input on a size mismatch.
bool dominance_leq(const Partition& lambda, const Partition& mu);

/// All mu obtained from lambda by adding k cells, no two in a column.
std::vector<Partition> pieri_strips(const Partition& lambda, int k);

/// Number of standard Young tableaux, by the hook length formula.
unsigned long long standard_tableaux_count(const Partition& lambda);

/// Monomial expansion of s_lambda(x_1..x_num_vars) by semistandard tableau
/// enumeration: exponent vector -> coefficient.
std::map<std::vector<int>, long long> schur_polynomial_coeffs(const Partition& lambda,
                                                              int num_vars);

}  // namespace stanley

template <>
struct std::hash<stanley::Partition> {
    std::size_t operator()(const stanley::Partition& p) const noexcept {
        std::size_t h = 1469598103934665603ULL;
        for (int v : p.parts()) {
            h ^= static_cast<std::size_t>(v);
            h *= 1099511628211ULL;
        }
        return h;
    }
};
