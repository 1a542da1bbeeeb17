#pragma once

#include <stdexcept>
#include <string>

namespace chaincmp {

// Bad parameters, malformed input files, violated preconditions.
// The CLI maps this to exit code 2.
class ValidationError : public std::invalid_argument {
public:
    explicit ValidationError(const std::string& msg) : std::invalid_argument(msg) {}
};

// An exact tie between compared order statistics. Probability zero under a
// continuous model, merely rare in doubles; callers decide how to recover.
// The CLI maps this to exit code 3.
class TieError : public std::runtime_error {
public:
    explicit TieError(const std::string& msg) : std::runtime_error(msg) {}
};

// An internal identity failed (non-exact division, mass-sum mismatch).
// Always a bug; never returned as a silent result. CLI exit code 1.
class ConsistencyError : public std::logic_error {
public:
    explicit ConsistencyError(const std::string& msg) : std::logic_error(msg) {}
};

} // namespace chaincmp
