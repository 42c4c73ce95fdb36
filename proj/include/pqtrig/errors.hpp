#pragma once

#include <stdexcept>
#include <string>

namespace pqtrig {

/// Argument outside the domain of the requested function.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Iterative method (series, quadrature, root finder) did not reach its
/// tolerance within the configured budget.
class NonConvergent : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Parameter combination for which the operation is undefined, e.g. a
/// hypergeometric lower parameter c in {0, -1, -2, ...}.
class InvalidParameter : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Result is not representable (division by an underflowed cosine).
class Overflow : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

}  // namespace pqtrig
