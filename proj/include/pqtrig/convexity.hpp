#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "pqtrig/target_function.hpp"

namespace pqtrig {

enum class Direction { convex, concave };

std::string_view to_string(Direction d);

struct AllPairs {};

struct RandomPairs {
  std::size_t count = 0;
  std::uint64_t seed = 0;
};

enum class Spacing { linear, logarithmic };

/// Sample grid on [lo + edge_margin, hi - edge_margin].
struct GridSpec {
  double lo = 0.0;
  double hi = 1.0;
  int n_points = 20;
  double edge_margin = 1e-4;
  std::variant<AllPairs, RandomPairs> pair_mode = AllPairs{};
  Spacing spacing = Spacing::linear;

  /// Linear all-pairs grid with the default margin 1e-4 (hi - lo).
  static GridSpec over(double lo, double hi, int n, Spacing spacing = Spacing::linear);
  static GridSpec over(Interval domain, int n, Spacing spacing = Spacing::linear) {
    return over(domain.lo, domain.hi, n, spacing);
  }

  /// Throws InvalidParameter when the inset interval is empty, n < 2, or a
  /// logarithmic grid would touch a nonpositive point.
  void validate() const;

  std::vector<double> points() const;

  /// Index pairs (i, j), i < j, in a deterministic order. Random pairs come
  /// from a seeded mt19937_64 and never repeat an index within a pair.
  std::vector<std::pair<int, int>> pairs() const;
};

/// A pair violating (or closest to violating) the defining inequality.
/// `gap` is the excess in the violating direction: lhs - rhs for convexity,
/// rhs - lhs for concavity.
struct Witness {
  double r = 0.0;
  double s = 0.0;
  double lhs = 0.0;
  double rhs = 0.0;
  double gap = 0.0;
};

struct ConvexityVerdict {
  bool holds = true;
  std::optional<Witness> witness;  // present iff !holds
  std::size_t samples_checked = 0;
  double worst_gap = 0.0;          // gap of the pair with the largest scaled excess
};

/// Checks f(M_a(r,s)) <= M_b(f(r), f(s)) (convex) or >= (concave) on every
/// grid pair. A pair violates when its gap exceeds tol * max(1, |rhs|); the
/// reported witness is the pair with the largest scaled gap, ties going to
/// the earliest pair. Grid and pair evaluations run under OpenMP; the
/// result does not depend on the thread count.
ConvexityVerdict check_ab_convex(const TargetFunction& f, double a, double b,
                                 const GridSpec& grid, double tol, Direction direction);

enum class Trend { increasing, decreasing, constant, non_monotone };

std::string_view to_string(Trend t);

/// First successive difference contradicting the dominant direction.
struct MonotoneWitness {
  double x0 = 0.0;
  double x1 = 0.0;
  double g0 = 0.0;
  double g1 = 0.0;
};

struct MonotoneResult {
  Trend trend = Trend::constant;
  std::optional<MonotoneWitness> witness;  // present iff non_monotone
};

/// Classifies the sequence g_i by the signs of its successive differences.
/// Differences within tol * max(1, |g_i|, |g_(i+1)|) of zero count as flat.
MonotoneResult classify_trend(std::span<const double> xs, std::span<const double> gs, double tol);

/// classify_trend applied to g sampled on the grid points.
MonotoneResult check_monotone(const std::function<double(double)>& g, const GridSpec& grid,
                              double tol);

struct CriterionVerdict {
  Trend trend = Trend::constant;
  std::optional<MonotoneWitness> witness;
  std::size_t samples_checked = 0;

  /// Increasing supports convexity, decreasing supports concavity and a
  /// constant sequence supports both.
  bool supports(Direction d) const;
};

/// Monotonicity of x -> x^(1-a) f'(x) f(x)^(b-1) on the grid: increasing
/// means (a,b)-convex, decreasing means (a,b)-concave.
CriterionVerdict check_derivative_criterion(const TargetFunction& f, double a, double b,
                                            const GridSpec& grid, double tol);

/// Single-threaded reference implementations, kept for testing the OpenMP
/// kernels and for benchmarking against them.
namespace serial {

ConvexityVerdict check_ab_convex(const TargetFunction& f, double a, double b,
                                 const GridSpec& grid, double tol, Direction direction);

CriterionVerdict check_derivative_criterion(const TargetFunction& f, double a, double b,
                                            const GridSpec& grid, double tol);

}  // namespace serial

namespace detail {

struct PairOutcome {
  double lhs;
  double rhs;
  double gap;
  double scaled;  // gap / max(1, |rhs|)
};

PairOutcome evaluate_pair(const TargetFunction& f, double a, double b, double r, double s,
                          double fr, double fs, Direction direction);

/// x^(1-a) f'(x) f(x)^(b-1)
double criterion_value(const TargetFunction& f, double a, double b, double x);

/// Total order used to pick the worst pair: larger scaled gap first, then
/// the smaller pair index.
inline bool worse_than(double scaled, std::size_t idx, double other_scaled,
                       std::size_t other_idx) {
  if (scaled != other_scaled) {
    return scaled > other_scaled;
  }
  return idx < other_idx;
}

ConvexityVerdict make_verdict(const std::vector<double>& points,
                              const std::vector<std::pair<int, int>>& pairs,
                              std::size_t worst_idx, const PairOutcome& worst, double tol);

}  // namespace detail

}  // namespace pqtrig
