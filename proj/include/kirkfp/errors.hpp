#pragma once

#include <stdexcept>
#include <string>

namespace kirkfp {

/// Thrown when an input violates a documented invariant (bad weight row,
/// dimension mismatch, malformed config, ...). The message names the
/// invariant so CLI users see which rule they broke.
class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

/// Thrown when a computation produces a non-finite value or exceeds a
/// numeric cap (overflowing binomials, NaN from an operator application).
class NumericError : public std::runtime_error {
public:
    explicit NumericError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace kirkfp
