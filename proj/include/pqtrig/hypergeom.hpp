#pragma once

#include <cstddef>

#include "pqtrig/numeric_config.hpp"

namespace pqtrig {

/// Shifted factorial (a)_n = a (a+1) ... (a+n-1), with (a)_0 = 1.
double pochhammer(double a, unsigned n);

/// Real arguments of 2F1(a, b; c; z). Series evaluation needs |z| < 1 and
/// c outside {0, -1, -2, ...}.
struct HypergeomArgs {
  double a = 0.0;
  double b = 0.0;
  double c = 1.0;
  double z = 0.0;
};

struct SeriesResult {
  double value = 0.0;
  std::size_t terms_used = 0;
  double tail_bound = 0.0;  // estimate of |sum of the omitted terms|
};

/// Partial sum of the Gauss series, stopped once the estimated tail falls
/// below cfg.series_tol relative to the partial sum and the term ratio has
/// dropped below one.
///
/// The tail estimate after n+1 terms is |t_{n+1}| / (1 - rho) where rho
/// bounds the remaining term ratios (max of the next ratio and |z|, the
/// limit of the ratio sequence).
///
/// Throws InvalidParameter for c in {0,-1,-2,...}, DomainError for
/// |z| >= 1 or non-finite input, NonConvergent when the term cap is hit.
SeriesResult gauss_2f1(const HypergeomArgs& args, const NumericConfig& cfg = {});

}  // namespace pqtrig
