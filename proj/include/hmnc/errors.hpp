#pragma once

#include <stdexcept>

namespace hmnc {

// Unreadable or malformed input (files, label data, CLI usage). CLI exit code 2.
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Violated domain precondition: degenerate class, negative count,
// mismatched populations. CLI exit code 3.
class DomainError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace hmnc
