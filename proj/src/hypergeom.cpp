#include "pqtrig/hypergeom.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "pqtrig/errors.hpp"

namespace pqtrig {

void NumericConfig::validate() const {
  if (!(series_tol > 0.0) || !(quad_tol > 0.0) || !(root_tol > 0.0)) {
    throw InvalidParameter("NumericConfig: tolerances must be positive");
  }
  if (series_max_terms < 1 || quad_levels < 1 || root_max_iter < 1) {
    throw InvalidParameter("NumericConfig: iteration caps must be >= 1");
  }
}

double pochhammer(double a, unsigned n) {
  double prod = 1.0;
  for (unsigned k = 0; k < n; ++k) {
    prod *= a + static_cast<double>(k);
  }
  return prod;
}

namespace {

bool is_nonpositive_integer(double c) {
  return c <= 0.0 && std::floor(c) == c;
}

}  // namespace

SeriesResult gauss_2f1(const HypergeomArgs& args, const NumericConfig& cfg) {
  const double a = args.a;
  const double b = args.b;
  const double c = args.c;
  const double z = args.z;
  if (!std::isfinite(a) || !std::isfinite(b) || !std::isfinite(c) || !std::isfinite(z)) {
    throw DomainError("gauss_2f1: non-finite argument");
  }
  if (is_nonpositive_integer(c)) {
    throw InvalidParameter("gauss_2f1: c must not be 0 or a negative integer, got " +
                           std::to_string(c));
  }
  if (!(std::abs(z) < 1.0)) {
    throw DomainError("gauss_2f1: series requires |z| < 1, got z = " + std::to_string(z));
  }
  if (z == 0.0) {
    return {1.0, 1, 0.0};
  }

  auto ratio = [&](std::size_t n) {
    const double nn = static_cast<double>(n);
    return (a + nn) * (b + nn) / ((c + nn) * (nn + 1.0)) * z;
  };

  double term = 1.0;
  double sum = 1.0;
  std::size_t used = 1;
  for (std::size_t n = 0;; ++n) {
    const double r = ratio(n);
    const double next = term * r;
    if (next == 0.0) {
      // a or b is a nonpositive integer: the series terminates.
      return {sum, used, 0.0};
    }
    const double rho = std::max(std::abs(ratio(n + 1)), std::abs(z));
    if (std::abs(r) < 1.0 && rho < 1.0) {
      const double tail = std::abs(next) / (1.0 - rho);
      if (tail <= cfg.series_tol * std::abs(sum)) {
        return {sum, used, tail};
      }
    }
    if (used >= cfg.series_max_terms) {
      throw NonConvergent("gauss_2f1: term cap reached at z = " + std::to_string(z));
    }
    sum += next;
    term = next;
    ++used;
  }
}

}  // namespace pqtrig
