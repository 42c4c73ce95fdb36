#include "pqtrig/quadrature.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "pqtrig/errors.hpp"

namespace pqtrig {

namespace {

// Beyond this abscissa 1 - tanh(pi/2 sinh t) underflows.
constexpr double kMaxAbscissa = 6.1;
constexpr int kMinAcceptLevel = 3;

// Sum of w(t) * [f at both mirrored nodes] over t = offset + k * step, k >= 0.
// Returns the weighted sum (not yet multiplied by the step).
double mirrored_sum(const EndpointIntegrand& f, double lo, double hi, double half, double t0,
                    double step) {
  constexpr double half_pi = std::numbers::pi / 2.0;
  double acc = 0.0;
  for (double t = t0; t <= kMaxAbscissa; t += step) {
    const double u = half_pi * std::sinh(t);
    const double e = std::exp(-2.0 * u);
    // 1 - tanh(u) = 2 e^{-2u} / (1 + e^{-2u})
    const double comp = 2.0 * e / (1.0 + e);
    const double cu = std::cosh(u);
    const double w = half_pi * std::cosh(t) / (cu * cu);
    const double d = half * comp;  // distance to the nearer endpoint
    if (d <= 0.0 || w == 0.0) {
      break;
    }
    const double far = 2.0 * half - d;
    if (t == 0.0) {
      acc += w * f(lo + half, half, half);
    } else {
      acc += w * (f(hi - d, far, d) + f(lo + d, d, far));
    }
  }
  return acc;
}

}  // namespace

QuadratureResult tanh_sinh(const EndpointIntegrand& f, double lo, double hi, int max_levels,
                           double tol) {
  if (!(hi >= lo)) {
    throw DomainError("tanh_sinh: empty or reversed interval");
  }
  if (hi == lo) {
    return {0.0, 0.0, 0};
  }
  const double half = 0.5 * (hi - lo);

  double step = 1.0;
  double sum = mirrored_sum(f, lo, hi, half, 0.0, step);
  double estimate = half * step * sum;
  for (int level = 1; level <= max_levels; ++level) {
    step *= 0.5;
    sum += mirrored_sum(f, lo, hi, half, step, 2.0 * step);
    const double refined = half * step * sum;
    const double diff = std::abs(refined - estimate);
    if (!std::isfinite(refined)) {
      throw NonConvergent("tanh_sinh: non-finite estimate");
    }
    if (level >= kMinAcceptLevel && diff < tol * std::max(1.0, std::abs(refined))) {
      return {refined, diff, level};
    }
    estimate = refined;
  }
  throw NonConvergent("tanh_sinh: no convergence within " + std::to_string(max_levels) +
                      " levels");
}

QuadratureResult tanh_sinh(const std::function<double(double)>& f, double lo, double hi,
                           int max_levels, double tol) {
  return tanh_sinh([&f](double t, double, double) { return f(t); }, lo, hi, max_levels, tol);
}

}  // namespace pqtrig
