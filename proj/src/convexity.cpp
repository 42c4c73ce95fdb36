#include "pqtrig/convexity.hpp"

#include <cmath>
#include <exception>
#include <limits>
#include <random>
#include <string>

#include "pqtrig/errors.hpp"
#include "pqtrig/power_mean.hpp"

namespace pqtrig {

std::string_view to_string(Direction d) {
  return d == Direction::convex ? "convex" : "concave";
}

std::string_view to_string(Trend t) {
  switch (t) {
    case Trend::increasing: return "increasing";
    case Trend::decreasing: return "decreasing";
    case Trend::constant: return "constant";
    case Trend::non_monotone: return "non_monotone";
  }
  return "unknown";
}

// --- GridSpec -----------------------------------------------------------------

GridSpec GridSpec::over(double lo, double hi, int n, Spacing spacing) {
  GridSpec g;
  g.lo = lo;
  g.hi = hi;
  g.n_points = n;
  g.edge_margin = 1e-4 * (hi - lo);
  g.spacing = spacing;
  return g;
}

void GridSpec::validate() const {
  if (n_points < 2) {
    throw InvalidParameter("GridSpec: n_points must be >= 2");
  }
  if (!(edge_margin >= 0.0) || !(lo + edge_margin < hi - edge_margin)) {
    throw InvalidParameter("GridSpec: empty interval after the edge margin");
  }
  if (spacing == Spacing::logarithmic && !(lo + edge_margin > 0.0)) {
    throw InvalidParameter("GridSpec: logarithmic spacing needs a positive lower end");
  }
  if (const auto* rp = std::get_if<RandomPairs>(&pair_mode); rp && rp->count == 0) {
    throw InvalidParameter("GridSpec: random pair count must be positive");
  }
}

std::vector<double> GridSpec::points() const {
  validate();
  const double a = lo + edge_margin;
  const double b = hi - edge_margin;
  std::vector<double> xs(static_cast<std::size_t>(n_points));
  const double denom = static_cast<double>(n_points - 1);
  for (int i = 0; i < n_points; ++i) {
    const double frac = static_cast<double>(i) / denom;
    if (spacing == Spacing::linear) {
      xs[i] = a + (b - a) * frac;
    } else {
      xs[i] = std::exp(std::log(a) + (std::log(b) - std::log(a)) * frac);
    }
  }
  xs.front() = a;
  xs.back() = b;
  return xs;
}

std::vector<std::pair<int, int>> GridSpec::pairs() const {
  validate();
  std::vector<std::pair<int, int>> out;
  if (const auto* rp = std::get_if<RandomPairs>(&pair_mode)) {
    std::mt19937_64 engine(rp->seed);
    const auto n = static_cast<std::uint64_t>(n_points);
    out.reserve(rp->count);
    for (std::size_t k = 0; k < rp->count; ++k) {
      auto i = static_cast<int>(engine() % n);
      auto j = static_cast<int>(engine() % (n - 1));
      if (j >= i) {
        ++j;
      }
      out.emplace_back(std::min(i, j), std::max(i, j));
    }
    return out;
  }
  out.reserve(static_cast<std::size_t>(n_points) * (n_points - 1) / 2);
  for (int i = 0; i < n_points; ++i) {
    for (int j = i + 1; j < n_points; ++j) {
      out.emplace_back(i, j);
    }
  }
  return out;
}

// --- shared kernels ----------------------------------------------------------

namespace detail {

PairOutcome evaluate_pair(const TargetFunction& f, double a, double b, double r, double s,
                          double fr, double fs, Direction direction) {
  const double lhs = f.value(power_mean(a, r, s));
  const double rhs = power_mean(b, fr, fs);
  if (!std::isfinite(lhs)) {
    throw DomainError(f.name() + ": non-finite value at the mean of " + std::to_string(r) +
                      " and " + std::to_string(s));
  }
  const double gap = direction == Direction::convex ? lhs - rhs : rhs - lhs;
  return {lhs, rhs, gap, gap / std::max(1.0, std::abs(rhs))};
}

double criterion_value(const TargetFunction& f, double a, double b, double x) {
  const double fx = f.value(x);
  if (!(fx > 0.0)) {
    throw DomainError(f.name() + ": derivative criterion needs f > 0, got f(" +
                      std::to_string(x) + ") = " + std::to_string(fx));
  }
  return std::pow(x, 1.0 - a) * f.derivative(x) * std::pow(fx, b - 1.0);
}

ConvexityVerdict make_verdict(const std::vector<double>& points,
                              const std::vector<std::pair<int, int>>& pairs,
                              std::size_t worst_idx, const PairOutcome& worst, double tol) {
  ConvexityVerdict v;
  v.samples_checked = pairs.size();
  v.worst_gap = worst.gap;
  v.holds = !(worst.scaled > tol);
  if (!v.holds) {
    const auto [i, j] = pairs[worst_idx];
    v.witness = Witness{points[i], points[j], worst.lhs, worst.rhs, worst.gap};
  }
  return v;
}

}  // namespace detail

namespace {

void require_positive(const TargetFunction& f, const std::vector<double>& xs,
                      const std::vector<double>& fx) {
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (!(fx[i] > 0.0) || !std::isfinite(fx[i])) {
      throw DomainError(f.name() + " must be positive and finite on the grid, got f(" +
                        std::to_string(xs[i]) + ") = " + std::to_string(fx[i]));
    }
  }
}

// Runs body(i) for i in [0, n) in parallel; rethrows the exception of the
// smallest failing index so error reporting is deterministic too.
template <typename Body>
void parallel_for(std::size_t n, Body&& body) {
  std::size_t first_bad = std::numeric_limits<std::size_t>::max();
  std::exception_ptr error;
  const auto count = static_cast<long long>(n);
#pragma omp parallel for schedule(dynamic, 4)
  for (long long k = 0; k < count; ++k) {
    try {
      body(static_cast<std::size_t>(k));
    } catch (...) {
#pragma omp critical(pqtrig_parallel_error)
      {
        if (static_cast<std::size_t>(k) < first_bad) {
          first_bad = static_cast<std::size_t>(k);
          error = std::current_exception();
        }
      }
    }
  }
  if (error) {
    std::rethrow_exception(error);
  }
}

}  // namespace

ConvexityVerdict check_ab_convex(const TargetFunction& f, double a, double b,
                                 const GridSpec& grid, double tol, Direction direction) {
  const auto xs = grid.points();
  const auto pairs = grid.pairs();

  std::vector<double> fx(xs.size());
  parallel_for(xs.size(), [&](std::size_t i) { fx[i] = f.value(xs[i]); });
  require_positive(f, xs, fx);

  std::vector<detail::PairOutcome> outcomes(pairs.size());
  parallel_for(pairs.size(), [&](std::size_t k) {
    const auto [i, j] = pairs[k];
    outcomes[k] = detail::evaluate_pair(f, a, b, xs[i], xs[j], fx[i], fx[j], direction);
  });

  std::size_t worst = 0;
  for (std::size_t k = 1; k < outcomes.size(); ++k) {
    if (detail::worse_than(outcomes[k].scaled, k, outcomes[worst].scaled, worst)) {
      worst = k;
    }
  }
  return detail::make_verdict(xs, pairs, worst, outcomes[worst], tol);
}

MonotoneResult classify_trend(std::span<const double> xs, std::span<const double> gs,
                              double tol) {
  if (xs.size() != gs.size() || gs.size() < 2) {
    throw InvalidParameter("classify_trend: need matching sequences of length >= 2");
  }
  int dominant = 0;  // sign of the first significant difference
  for (std::size_t i = 0; i + 1 < gs.size(); ++i) {
    const double d = gs[i + 1] - gs[i];
    const double band = tol * std::max({1.0, std::abs(gs[i]), std::abs(gs[i + 1])});
    if (!std::isfinite(d)) {
      return {Trend::non_monotone, MonotoneWitness{xs[i], xs[i + 1], gs[i], gs[i + 1]}};
    }
    const int sign = d > band ? 1 : (d < -band ? -1 : 0);
    if (sign == 0) {
      continue;
    }
    if (dominant == 0) {
      dominant = sign;
    } else if (sign != dominant) {
      return {Trend::non_monotone, MonotoneWitness{xs[i], xs[i + 1], gs[i], gs[i + 1]}};
    }
  }
  if (dominant > 0) {
    return {Trend::increasing, std::nullopt};
  }
  if (dominant < 0) {
    return {Trend::decreasing, std::nullopt};
  }
  return {Trend::constant, std::nullopt};
}

MonotoneResult check_monotone(const std::function<double(double)>& g, const GridSpec& grid,
                              double tol) {
  const auto xs = grid.points();
  std::vector<double> gs(xs.size());
  parallel_for(xs.size(), [&](std::size_t i) { gs[i] = g(xs[i]); });
  return classify_trend(xs, gs, tol);
}

bool CriterionVerdict::supports(Direction d) const {
  if (trend == Trend::constant) {
    return true;
  }
  return d == Direction::convex ? trend == Trend::increasing : trend == Trend::decreasing;
}

CriterionVerdict check_derivative_criterion(const TargetFunction& f, double a, double b,
                                            const GridSpec& grid, double tol) {
  const auto xs = grid.points();
  std::vector<double> gs(xs.size());
  parallel_for(xs.size(),
               [&](std::size_t i) { gs[i] = detail::criterion_value(f, a, b, xs[i]); });
  const auto m = classify_trend(xs, gs, tol);
  return {m.trend, m.witness, xs.size()};
}

}  // namespace pqtrig
