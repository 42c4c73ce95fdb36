#include "pqtrig/power_mean.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "pqtrig/errors.hpp"

namespace pqtrig {

namespace {
constexpr double kGeometricThreshold = 1e-13;
}

MeanOrder::MeanOrder(double a) : a_(a) {
  if (!std::isfinite(a)) {
    throw DomainError("power mean order must be finite");
  }
}

double power_mean(MeanOrder order, double x, double y) {
  if (!(x > 0.0) || !(y > 0.0) || !std::isfinite(x) || !std::isfinite(y)) {
    throw DomainError("power_mean: arguments must be finite and > 0, got " + std::to_string(x) +
                      ", " + std::to_string(y));
  }
  const double lo = std::min(x, y);
  const double hi = std::max(x, y);
  if (x == y) {
    return x;
  }
  const double a = order.value();
  double m;
  if (std::abs(a) < kGeometricThreshold) {
    m = std::sqrt(x) * std::sqrt(y);
  } else {
    const double u = a * std::log(x);
    const double v = a * std::log(y);
    const double top = std::max(u, v);
    // log((e^u + e^v) / 2)
    const double log_avg = top + std::log1p(std::exp(-std::abs(u - v))) - std::numbers::ln2;
    m = std::exp(log_avg / a);
  }
  return std::clamp(m, lo, hi);
}

}  // namespace pqtrig
