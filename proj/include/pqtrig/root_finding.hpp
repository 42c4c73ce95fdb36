#pragma once

#include <cmath>
#include <limits>

namespace pqtrig {

struct RootResult {
  double x = 0.0;
  double residual = 0.0;
  int iterations = 0;
  bool converged = false;
};

/// Newton iteration kept inside the sign-change bracket [lo, hi].
///
/// `eval(x)` returns {f(x), f'(x)}. `increasing` states the orientation of
/// the bracket: f(lo) <= 0 <= f(hi) when true, the reverse otherwise. Any
/// Newton step that leaves the open bracket (or a zero/non-finite slope) is
/// replaced by bisection. Stops when |f| <= ftol or when the bracket has
/// shrunk to a few ulps, at which point f cannot be resolved further.
template <typename Eval>
RootResult safeguarded_newton(Eval&& eval, double lo, double hi, double x0, bool increasing,
                              double ftol, int max_iter) {
  constexpr double eps = std::numeric_limits<double>::epsilon();
  double x = (x0 > lo && x0 < hi) ? x0 : 0.5 * (lo + hi);
  double fx = 0.0;
  for (int it = 1; it <= max_iter; ++it) {
    const auto [f, df] = eval(x);
    fx = f;
    if (std::abs(f) <= ftol) {
      return {x, f, it, true};
    }
    const bool root_above = increasing ? (f < 0.0) : (f > 0.0);
    if (root_above) {
      lo = x;
    } else {
      hi = x;
    }
    if (hi - lo <= 4.0 * eps * std::max(std::abs(lo), std::abs(hi))) {
      return {x, f, it, true};
    }
    double next = x - f / df;
    if (!std::isfinite(next) || !(next > lo && next < hi)) {
      next = 0.5 * (lo + hi);
    }
    if (next == x) {
      return {x, f, it, true};
    }
    x = next;
  }
  return {x, fx, max_iter, false};
}

}  // namespace pqtrig
