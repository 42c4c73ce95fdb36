#pragma once

#include <functional>

namespace pqtrig {

/// Integrand that also receives the distances of the node to the two
/// interval endpoints, computed without cancellation. Integrands with an
/// algebraic endpoint singularity should form (1 - t^q) and friends from
/// these distances rather than from t itself.
using EndpointIntegrand = std::function<double(double t, double from_lo, double from_hi)>;

struct QuadratureResult {
  double value = 0.0;
  double error_estimate = 0.0;  // |I_level - I_(level-1)| at acceptance
  int levels_used = 0;
};

/// Tanh-sinh (double exponential) quadrature of f over [lo, hi].
///
/// Level k uses step 2^-k in the transformed variable; levels are refined
/// until two successive estimates differ by less than
/// tol * max(1, |I|). Throws NonConvergent when max_levels is exhausted.
QuadratureResult tanh_sinh(const EndpointIntegrand& f, double lo, double hi, int max_levels,
                           double tol);

QuadratureResult tanh_sinh(const std::function<double(double)>& f, double lo, double hi,
                           int max_levels, double tol);

}  // namespace pqtrig
