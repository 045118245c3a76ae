#pragma once

#include <stdexcept>
#include <string>

namespace rank2 {

// Bad input: out-of-range element, malformed file, mismatched moduli.
class ArgumentError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A configurable budget (coset cap, tensor cap, n_max) was exceeded.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A computed result contradicts a proven statement. Always a bug or a finding.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace rank2
