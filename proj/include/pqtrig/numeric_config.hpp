#pragma once

#include <cstddef>

namespace pqtrig {

/// Tolerances and iteration budgets shared by the series, quadrature and
/// root-finding layers.
struct NumericConfig {
  double series_tol = 1e-14;             // relative truncation bound
  std::size_t series_max_terms = 1'000'000;
  int quad_levels = 12;                  // tanh-sinh halvings of the step
  double quad_tol = 1e-12;
  double root_tol = 1e-12;
  int root_max_iter = 200;

  /// Throws InvalidParameter when a tolerance is not positive or a cap is 0.
  void validate() const;
};

}  // namespace pqtrig
