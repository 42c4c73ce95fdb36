#include "pqtrig/pq_functions.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "pqtrig/errors.hpp"
#include "pqtrig/hypergeom.hpp"
#include "pqtrig/quadrature.hpp"
#include "pqtrig/root_finding.hpp"

namespace pqtrig {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
constexpr double kEps = std::numeric_limits<double>::epsilon();

// Switch between direct and complementary series when the series argument
// crosses 1/2; both series then converge at least like 2^-n.
constexpr double kSeriesSplit = 0.5;
// arsinh: direct series up to x^q = 1/2, transformed series up to x^q = 3,
// large-argument expansion beyond.
constexpr double kArsinhFar = 3.0;

std::string num(double v) { return std::to_string(v); }

// 1 - x^q for x in [0, 1], accurate near x = 1.
double one_minus_pow(double x, double q) {
  if (x <= 0.5) {
    return 1.0 - std::pow(x, q);
  }
  return -std::expm1(q * std::log(x));
}

double cached(std::atomic<double>& slot, auto&& compute) {
  double v = slot.load(std::memory_order_acquire);
  if (std::isnan(v)) {
    v = compute();
    slot.store(v, std::memory_order_release);
  }
  return v;
}

// integral_0^w u^(p-2) (1-u^p)^(1/q-1) du written through s = w^(p-1) and
// v = w^p:  s/(p-1) F(1-1/q, 1-1/p; 2-1/p; v).
double complement_integral(const PQParams& P, double s, double v, const NumericConfig& cfg) {
  const double p = P.p();
  const double q = P.q();
  const double beta = 1.0 - 1.0 / p;
  const auto F = gauss_2f1({1.0 - 1.0 / q, beta, 1.0 + beta, v}, cfg);
  return s / (p - 1.0) * F.value;
}

// Derivative of complement_integral with respect to s.
double complement_integral_ds(const PQParams& P, double v) {
  return std::pow(1.0 - v, 1.0 / P.q() - 1.0) / (P.p() - 1.0);
}

void check_newton(const RootResult& r, double tol, const char* what) {
  if (!r.converged && !(std::abs(r.residual) <= tol)) {
    throw NonConvergent(std::string(what) + ": iteration cap reached, residual " +
                        num(r.residual));
  }
}

}  // namespace

// --- PQParams -----------------------------------------------------------------

PQParams::PQParams(double p, double q)
    : p_(p), q_(q), half_pi_quad_(kNaN), half_pi_series_(kNaN), split_arcsin_(kNaN) {
  if (!std::isfinite(p) || !(p > 1.0)) {
    throw DomainError("p must be > 1, got " + num(p));
  }
  if (!std::isfinite(q) || !(q > 1.0)) {
    throw DomainError("q must be > 1, got " + num(q));
  }
}

PQParams::PQParams(const PQParams& other)
    : p_(other.p_),
      q_(other.q_),
      half_pi_quad_(other.half_pi_quad_.load()),
      half_pi_series_(other.half_pi_series_.load()),
      split_arcsin_(other.split_arcsin_.load()) {}

PQParams& PQParams::operator=(const PQParams& other) {
  p_ = other.p_;
  q_ = other.q_;
  half_pi_quad_.store(other.half_pi_quad_.load());
  half_pi_series_.store(other.half_pi_series_.load());
  split_arcsin_.store(other.split_arcsin_.load());
  return *this;
}

std::optional<double> PQParams::cached_half_pi() const {
  const double v = half_pi_quad_.load();
  if (std::isnan(v)) {
    return std::nullopt;
  }
  return v;
}

// --- constants ------------------------------------------------------------------

double pi_pq_half(const PQParams& P, const NumericConfig& cfg) {
  return cached(P.half_pi_quad_, [&] { return quad_oracle(OracleKind::arcsin, P, 1.0, cfg); });
}

double arcsin_split_point(const PQParams& P, const NumericConfig& cfg) {
  return cached(P.split_arcsin_, [&] {
    return arcsin_pq_direct(P, std::pow(kSeriesSplit, 1.0 / P.q()), cfg);
  });
}

double pi_pq_half_series(const PQParams& P, const NumericConfig& cfg) {
  return cached(P.half_pi_series_, [&] {
    const double p = P.p();
    const double s = std::pow(kSeriesSplit, (p - 1.0) / p);
    return arcsin_split_point(P, cfg) + p / P.q() * complement_integral(P, s, kSeriesSplit, cfg);
  });
}

// --- inverse functions ------------------------------------------------------------

double arcsin_pq_direct(const PQParams& P, double x, const NumericConfig& cfg) {
  if (!(x >= 0.0 && x < 1.0)) {
    throw DomainError("arcsin_pq: x must lie in [0, 1), got " + num(x));
  }
  if (x == 0.0) {
    return 0.0;
  }
  const double q = P.q();
  const auto F = gauss_2f1({1.0 / P.p(), 1.0 / q, 1.0 + 1.0 / q, std::pow(x, q)}, cfg);
  return x * F.value;
}

double arcsin_pq(const PQParams& P, double x, const NumericConfig& cfg) {
  if (!(x >= 0.0 && x < 1.0)) {
    throw DomainError("arcsin_pq: x must lie in [0, 1), got " + num(x));
  }
  const double q = P.q();
  if (std::pow(x, q) <= kSeriesSplit) {
    return arcsin_pq_direct(P, x, cfg);
  }
  // arcsin(x) = pi/2 - arccos(w) with w^p = 1 - x^q.
  const double p = P.p();
  const double v = one_minus_pow(x, q);
  const double s = std::pow(v, (p - 1.0) / p);
  return pi_pq_half_series(P, cfg) - p / q * complement_integral(P, s, v, cfg);
}

double half_pi_minus_arccos_pq(const PQParams& P, double x, const NumericConfig& cfg) {
  if (!(x > 0.0 && x <= 1.0)) {
    throw DomainError("arccos_pq: x must lie in (0, 1], got " + num(x));
  }
  const double p = P.p();
  const double q = P.q();
  const double v = std::pow(x, p);
  if (v <= kSeriesSplit) {
    return p / q * complement_integral(P, std::pow(x, p - 1.0), v, cfg);
  }
  if (x == 1.0) {
    return pi_pq_half_series(P, cfg);
  }
  const double y = std::pow(one_minus_pow(x, p), 1.0 / q);
  return pi_pq_half_series(P, cfg) - arcsin_pq_direct(P, y, cfg);
}

double arccos_pq(const PQParams& P, double x, const NumericConfig& cfg) {
  if (!(x > 0.0 && x <= 1.0)) {
    throw DomainError("arccos_pq: x must lie in (0, 1], got " + num(x));
  }
  if (x == 1.0) {
    return 0.0;
  }
  const double p = P.p();
  const double v = std::pow(x, p);
  if (v <= kSeriesSplit) {
    return pi_pq_half_series(P, cfg) - half_pi_minus_arccos_pq(P, x, cfg);
  }
  const double y = std::pow(one_minus_pow(x, p), 1.0 / P.q());
  return arcsin_pq_direct(P, y, cfg);
}

double arsinh_pq_direct(const PQParams& P, double x, const NumericConfig& cfg) {
  const double q = P.q();
  if (!(x >= 0.0) || !(std::pow(x, q) < 1.0)) {
    throw DomainError("arsinh_pq_direct: needs 0 <= x and x^q < 1, got " + num(x));
  }
  if (x == 0.0) {
    return 0.0;
  }
  const auto F = gauss_2f1({1.0 / P.p(), 1.0 / q, 1.0 + 1.0 / q, -std::pow(x, q)}, cfg);
  return x * F.value;
}

double arsinh_pq_transformed(const PQParams& P, double x, const NumericConfig& cfg) {
  if (!(x >= 0.0) || !std::isfinite(x)) {
    throw DomainError("arsinh_pq: x must be finite and >= 0, got " + num(x));
  }
  if (x == 0.0) {
    return 0.0;
  }
  const double p = P.p();
  const double q = P.q();
  const double xq = std::pow(x, q);
  const double z = xq / (1.0 + xq);
  const auto F = gauss_2f1({1.0, 1.0 / p, 1.0 + 1.0 / q, z}, cfg);
  // (x^p / (1 + x^q))^(1/p) = x (1 + x^q)^(-1/p)
  return x * std::exp(-std::log1p(xq) / p) * F.value;
}

namespace {

// arsinh(x) - arsinh(x0) for x >= x0 with x0^q = kArsinhFar, from
// (1+t^q)^(-1/p) = sum_n (1/p)_n (-1)^n / n! t^(-q/p - qn) integrated termwise.
double arsinh_far_increment(const PQParams& P, double x, double x0, const NumericConfig& cfg) {
  const double p = P.p();
  const double q = P.q();
  const double L = std::log(x / x0);
  const double e0 = 1.0 - q / p;
  const double base = std::pow(x0, e0);
  double coeff = 1.0;  // (1/p)_n (-1)^n / n!
  double shrink = 1.0;  // x0^(-qn) = kArsinhFar^-n
  double sum = 0.0;
  for (std::size_t n = 0; n < cfg.series_max_terms; ++n) {
    const double e = e0 - q * static_cast<double>(n);
    const double growth = (e == 0.0) ? L : std::expm1(e * L) / e;
    const double term = coeff * base * shrink * growth;
    sum += term;
    if (n > 0 && std::abs(term) <= 0.5 * cfg.series_tol * std::abs(sum)) {
      return sum;
    }
    coeff *= -(1.0 / p + static_cast<double>(n)) / static_cast<double>(n + 1);
    shrink /= kArsinhFar;
  }
  throw NonConvergent("arsinh_pq: large-argument expansion hit the term cap");
}

}  // namespace

double arsinh_pq(const PQParams& P, double x, const NumericConfig& cfg) {
  if (!(x >= 0.0) || !std::isfinite(x)) {
    throw DomainError("arsinh_pq: x must be finite and >= 0, got " + num(x));
  }
  const double xq = std::pow(x, P.q());
  if (xq <= kSeriesSplit) {
    return arsinh_pq_direct(P, x, cfg);
  }
  if (xq <= kArsinhFar) {
    return arsinh_pq_transformed(P, x, cfg);
  }
  const double x0 = std::pow(kArsinhFar, 1.0 / P.q());
  return arsinh_pq_transformed(P, x0, cfg) + arsinh_far_increment(P, x, x0, cfg);
}

namespace {

struct TanSolution {
  double s;  // sin_{p,q}(t)
  double c;  // cos_{p,q}(t)
};

// For tan(t) = y in (0, 1): s^q + (s/y)^p = 1 with s in (0, y).
TanSolution solve_tan_equation(const PQParams& P, double y, const NumericConfig& cfg) {
  const double p = P.p();
  const double q = P.q();
  auto eval = [&](double s) {
    const double c = s / y;
    const double h = std::pow(s, q) + std::pow(c, p) - 1.0;
    const double dh = q * std::pow(s, q - 1.0) + p / y * std::pow(c, p - 1.0);
    return std::pair{h, dh};
  };
  const double s0 = y / std::pow(1.0 + std::pow(y, p), 1.0 / p);
  const auto r = safeguarded_newton(eval, 0.0, y, s0, true, 4.0 * kEps, cfg.root_max_iter);
  check_newton(r, cfg.root_tol, "arctan_pq");
  return {r.x, r.x / y};
}

}  // namespace

double arctan_pq(const PQParams& P, double y, const NumericConfig& cfg) {
  if (!(y > 0.0 && y < 1.0)) {
    throw DomainError("arctan_pq: y must lie in (0, 1), got " + num(y));
  }
  return arcsin_pq(P, solve_tan_equation(P, y, cfg).s, cfg);
}

// --- forward functions ------------------------------------------------------------

SinCos sin_cos_pq(const PQParams& P, double x, const NumericConfig& cfg) {
  const double half_pi = pi_pq_half_series(P, cfg);
  if (!(x > 0.0 && x < half_pi)) {
    throw DomainError("sin_pq: x must lie in (0, pi_pq/2) = (0, " + num(half_pi) + "), got " +
                      num(x));
  }
  const double p = P.p();
  const double q = P.q();

  if (x <= arcsin_split_point(P, cfg)) {
    const double y_hi = std::pow(kSeriesSplit, 1.0 / q);
    auto eval = [&](double y) {
      return std::pair{arcsin_pq_direct(P, y, cfg) - x, std::pow(one_minus_pow(y, q), -1.0 / p)};
    };
    const auto r =
        safeguarded_newton(eval, 0.0, y_hi, x, true, 4.0 * kEps * x, cfg.root_max_iter);
    check_newton(r, cfg.root_tol, "sin_pq");
    return {r.x, std::pow(one_minus_pow(r.x, q), 1.0 / p)};
  }

  // Solve (p/q) C(w) = pi/2 - x for s = w^(p-1), where C is the
  // complementary integral and w = cos_{p,q}(x).
  const double delta = half_pi - x;
  const double s_hi = std::pow(kSeriesSplit, (p - 1.0) / p);
  const double k = p / q;
  const double v_exp = p / (p - 1.0);
  auto eval = [&](double s) {
    const double v = std::pow(s, v_exp);
    return std::pair{k * complement_integral(P, s, v, cfg) - delta,
                     k * complement_integral_ds(P, v)};
  };
  const double s0 = delta * (p - 1.0) / k;
  const auto r =
      safeguarded_newton(eval, 0.0, s_hi, s0, true, 4.0 * kEps * delta, cfg.root_max_iter);
  check_newton(r, cfg.root_tol, "sin_pq");
  const double w = std::pow(r.x, 1.0 / (p - 1.0));
  const double v = std::pow(r.x, v_exp);
  return {std::exp(std::log1p(-v) / q), w};
}

double sin_pq(const PQParams& P, double x, const NumericConfig& cfg) {
  return sin_cos_pq(P, x, cfg).sin;
}

double cos_pq(const PQParams& P, double x, const NumericConfig& cfg) {
  return sin_cos_pq(P, x, cfg).cos;
}

double tan_pq(const PQParams& P, double x, const NumericConfig& cfg) {
  const auto sc = sin_cos_pq(P, x, cfg);
  if (sc.cos == 0.0) {
    throw Overflow("tan_pq: cos_pq underflows at x = " + num(x));
  }
  return sc.sin / sc.cos;
}

double sinh_pq(const PQParams& P, double x, const NumericConfig& cfg) {
  if (!(x > 0.0) || !std::isfinite(x)) {
    throw DomainError("sinh_pq: x must be finite and > 0, got " + num(x));
  }
  const double p = P.p();
  const double q = P.q();
  // arsinh(y) <= y, so the root is at least x.
  double lo = x;
  double hi = 2.0 * x;
  while (arsinh_pq(P, hi, cfg) <= x) {
    lo = hi;
    hi *= 2.0;
    if (hi > 1e300) {
      throw DomainError("sinh_pq: x = " + num(x) + " exceeds the range of arsinh_pq");
    }
  }
  auto eval = [&](double y) {
    return std::pair{arsinh_pq(P, y, cfg) - x, std::exp(-std::log1p(std::pow(y, q)) / p)};
  };
  const double ftol = 4.0 * kEps * x;
  const auto r = safeguarded_newton(eval, lo, hi, lo + 0.25 * (hi - lo), true, ftol,
                                    cfg.root_max_iter);
  check_newton(r, cfg.root_tol, "sinh_pq");
  return r.x;
}

// --- derivatives ------------------------------------------------------------------

double d_sin_pq(const PQParams& P, double x, const NumericConfig& cfg) {
  return cos_pq(P, x, cfg);
}

double d_cos_pq(const PQParams& P, double x, const NumericConfig& cfg) {
  const auto sc = sin_cos_pq(P, x, cfg);
  const double p = P.p();
  const double q = P.q();
  return -q / p * std::pow(sc.cos, 2.0 - p) * std::pow(sc.sin, q - 1.0);
}

double d_tan_pq(const PQParams& P, double x, const NumericConfig& cfg) {
  const auto sc = sin_cos_pq(P, x, cfg);
  const double p = P.p();
  const double q = P.q();
  return 1.0 + q * std::pow(sc.sin, q) / (p * std::pow(sc.cos, p));
}

double d_arcsin_pq(const PQParams& P, double x) {
  if (!(x >= 0.0 && x < 1.0)) {
    throw DomainError("d_arcsin_pq: x must lie in [0, 1), got " + num(x));
  }
  return std::pow(one_minus_pow(x, P.q()), -1.0 / P.p());
}

double d_half_pi_minus_arccos_pq(const PQParams& P, double x) {
  if (!(x > 0.0 && x < 1.0)) {
    throw DomainError("d_arccos_pq: x must lie in (0, 1), got " + num(x));
  }
  const double p = P.p();
  const double q = P.q();
  return p / q * std::pow(one_minus_pow(x, p), 1.0 / q - 1.0) * std::pow(x, p - 2.0);
}

double d_arccos_pq(const PQParams& P, double x) { return -d_half_pi_minus_arccos_pq(P, x); }

double d_arsinh_pq(const PQParams& P, double x) {
  if (!(x >= 0.0)) {
    throw DomainError("d_arsinh_pq: x must be >= 0, got " + num(x));
  }
  return std::exp(-std::log1p(std::pow(x, P.q())) / P.p());
}

double d_arctan_pq(const PQParams& P, double y, const NumericConfig& cfg) {
  if (!(y > 0.0 && y < 1.0)) {
    throw DomainError("d_arctan_pq: y must lie in (0, 1), got " + num(y));
  }
  const auto sol = solve_tan_equation(P, y, cfg);
  const double p = P.p();
  const double q = P.q();
  return 1.0 / (1.0 + q * std::pow(sol.s, q) / (p * std::pow(sol.c, p)));
}

double d_sinh_pq(const PQParams& P, double x, const NumericConfig& cfg) {
  const double y = sinh_pq(P, x, cfg);
  return std::exp(std::log1p(std::pow(y, P.q())) / P.p());
}

// --- quadrature oracle --------------------------------------------------------------

double quad_oracle(OracleKind kind, const PQParams& P, double x, const NumericConfig& cfg) {
  const double p = P.p();
  const double q = P.q();
  // On [0, x] the left distance is the node itself; 1 - t is rebuilt from
  // the right distance so it stays exact near t = 1.
  auto one_minus_power = [x](double t, double from_hi, double e) {
    if (t <= 0.5) {
      return 1.0 - std::pow(t, e);
    }
    return -std::expm1(e * std::log1p(-((1.0 - x) + from_hi)));
  };

  EndpointIntegrand f;
  switch (kind) {
    case OracleKind::arcsin:
      if (!(x >= 0.0 && x <= 1.0)) {
        throw DomainError("quad_oracle(arcsin): x must lie in [0, 1], got " + num(x));
      }
      f = [&](double, double t, double from_hi) {
        return std::pow(one_minus_power(t, from_hi, q), -1.0 / p);
      };
      break;
    case OracleKind::arsinh:
      if (!(x >= 0.0) || !std::isfinite(x)) {
        throw DomainError("quad_oracle(arsinh): x must be finite and >= 0, got " + num(x));
      }
      f = [&](double, double t, double) { return std::pow(1.0 + std::pow(t, q), -1.0 / p); };
      break;
    case OracleKind::arccos_complement:
      if (!(x > 0.0 && x <= 1.0)) {
        throw DomainError("quad_oracle(arccos_complement): x must lie in (0, 1], got " + num(x));
      }
      f = [&](double, double u, double from_hi) {
        return std::pow(one_minus_power(u, from_hi, p), 1.0 / q - 1.0) * std::pow(u, p - 2.0);
      };
      break;
  }
  return tanh_sinh(f, 0.0, x, cfg.quad_levels, cfg.quad_tol).value;
}

}  // namespace pqtrig
