#pragma once

#include <map>
#include <optional>
#include <string>

#include "stanley/partition.hpp"

namespace stanley {

/// A nonnegative integer combination of Schur functions, homogeneous of one
/// degree. Terms iterate in ascending lex order on shapes, which refines
/// dominance order.
class SchurExpansion {
public:
    SchurExpansion() = default;

    /// The expansion of the constant 1 (the empty shape with multiplicity 1).
    static SchurExpansion one();

    void add(const Partition& shape, long long mult = 1);
    void add(const SchurExpansion& other);

    bool empty() const { return terms_.empty(); }
    std::size_t distinct_shapes() const { return terms_.size(); }

    /// Sum of multiplicities.
    long long total() const;

    /// Largest coefficient; 1 iff multiplicity free. Zero when empty.
    long long max_multiplicity() const;

    long long multiplicity(const Partition& shape) const;

    /// Common size of all shapes; -1 when empty.
    int degree() const { return degree_; }

    const std::map<Partition, long long>& terms() const { return terms_; }

    bool operator==(const SchurExpansion&) const = default;

    /// Schur-positive difference a - b, or nullopt if some coefficient of b
    /// exceeds its counterpart in a.
    static std::optional<SchurExpansion> try_subtract(const SchurExpansion& a,
                                                      const SchurExpansion& b);

    /// "s[3,2,2] + 2 s[3,3,1]"; "0" when empty.
    std::string str() const;

private:
    std::map<Partition, long long> terms_;
    int degree_ = -1;
};

}  // namespace stanley
