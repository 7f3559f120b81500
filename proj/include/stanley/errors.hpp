#pragma once

#include <stdexcept>
#include <string>

namespace stanley {

/// Bad argument values: non-bijections, size mismatches, non-reduced words,
/// unrecognized names. Maps to CLI exit code 1.
struct invalid_input : std::invalid_argument {
    explicit invalid_input(const std::string& msg) : std::invalid_argument(msg) {}
};

/// A predicate offered for minimal-pattern mining failed its closure self-test.
struct predicate_not_closed : invalid_input {
    explicit predicate_not_closed(const std::string& msg) : invalid_input(msg) {}
};

/// A subdiagram whose irreducible decomposition we have no route for.
struct unsupported_subdiagram : invalid_input {
    explicit unsupported_subdiagram(const std::string& msg) : invalid_input(msg) {}
};

/// Resource-style failures (caps, budgets). Maps to CLI exit code 3.
struct budget_error : std::runtime_error {
    explicit budget_error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Word enumeration exceeded its cap.
struct enumeration_limit_error : budget_error {
    explicit enumeration_limit_error(const std::string& msg) : budget_error(msg) {}
};

/// Tree construction exceeded its node budget. Firing indicates a bug or an
/// absurdly small budget; the trees involved are finite.
struct tree_budget_error : budget_error {
    explicit tree_budget_error(const std::string& msg) : budget_error(msg) {}
};

/// A scan was asked for more work than the configured maximum.
struct resource_error : budget_error {
    explicit resource_error(const std::string& msg) : budget_error(msg) {}
};

}  // namespace stanley
