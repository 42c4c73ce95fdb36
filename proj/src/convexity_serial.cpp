#include "pqtrig/convexity.hpp"

namespace pqtrig::serial {

ConvexityVerdict check_ab_convex(const TargetFunction& f, double a, double b,
                                 const GridSpec& grid, double tol, Direction direction) {
  const auto xs = grid.points();
  const auto pairs = grid.pairs();
  std::vector<double> fx;
  fx.reserve(xs.size());
  for (double x : xs) {
    fx.push_back(f.value(x));
  }

  std::size_t worst_idx = 0;
  detail::PairOutcome worst{};
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    const auto [i, j] = pairs[k];
    const auto o = detail::evaluate_pair(f, a, b, xs[i], xs[j], fx[i], fx[j], direction);
    if (k == 0 || detail::worse_than(o.scaled, k, worst.scaled, worst_idx)) {
      worst = o;
      worst_idx = k;
    }
  }
  return detail::make_verdict(xs, pairs, worst_idx, worst, tol);
}

CriterionVerdict check_derivative_criterion(const TargetFunction& f, double a, double b,
                                            const GridSpec& grid, double tol) {
  const auto xs = grid.points();
  std::vector<double> gs;
  gs.reserve(xs.size());
  for (double x : xs) {
    gs.push_back(detail::criterion_value(f, a, b, x));
  }
  const auto m = classify_trend(xs, gs, tol);
  return {m.trend, m.witness, xs.size()};
}

}  // namespace pqtrig::serial
