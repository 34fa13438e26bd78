#pragma once

#include <stdexcept>
#include <string>

namespace coulomb {

/// Malformed input: bad root data, rank mismatches, non-integral weight strings.
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An operation was called outside its domain (e.g. a non-symplectic
/// representation passed to the anomaly check).
class PreconditionError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// The monopole sum does not converge ("not good" theory) or exceeds the
/// configured enumeration box.
class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace coulomb
