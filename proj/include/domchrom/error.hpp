#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace domchrom {

/// Out-of-range construction parameter (family sizes, k, ...).
struct ParameterError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Argument does not refer to something that exists in the graph, or is otherwise unusable.
struct ArgumentError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// The quantity is undefined on this input (isolated vertices, formula outside its domain).
struct DomainError : std::domain_error {
    using std::domain_error::domain_error;
};

/// Instance exceeds a configured size budget.
struct BudgetError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t offset)
        : std::runtime_error(what + " (at byte " + std::to_string(offset) + ")"), offset_(offset) {}

    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

}  // namespace domchrom
