#include "pqtrig/suites.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <exception>
#include <functional>
#include <limits>

#include "pqtrig/pq_functions.hpp"
#include "pqtrig/target_function.hpp"

namespace pqtrig {

namespace {

constexpr std::array<std::pair<SuiteId, std::string_view>, 9> kSuiteNames{{
    {SuiteId::T1_1, "T1_1"},
    {SuiteId::T1_2, "T1_2"},
    {SuiteId::T1_3, "T1_3"},
    {SuiteId::T1_4, "T1_4"},
    {SuiteId::T1_5, "T1_5"},
    {SuiteId::corollary_T1_5, "corollary_T1_5"},
    {SuiteId::L2_7, "L2_7"},
    {SuiteId::L2_8, "L2_8"},
    {SuiteId::L2_9, "L2_9"},
}};

constexpr std::array<SuiteId, 9> kAllSuites{
    SuiteId::T1_1, SuiteId::T1_2, SuiteId::T1_3, SuiteId::T1_4, SuiteId::T1_5,
    SuiteId::corollary_T1_5, SuiteId::L2_7, SuiteId::L2_8, SuiteId::L2_9,
};

struct TheoremTarget {
  FunctionTag tag;
  Direction direction;
  Spacing spacing = Spacing::linear;
};

struct LemmaTarget {
  FunctionTag tag;
  Trend expected;
  Spacing spacing = Spacing::linear;
};

struct Block {
  std::vector<PQPair> pq;
  std::vector<ABPair> ab;
};

std::vector<ABPair> cross(std::initializer_list<double> as, std::initializer_list<double> bs) {
  std::vector<ABPair> out;
  for (double a : as) {
    for (double b : bs) {
      out.emplace_back(a, b);
    }
  }
  return out;
}

std::vector<ABPair> diagonal(std::initializer_list<double> as) {
  std::vector<ABPair> out;
  for (double a : as) {
    out.emplace_back(a, a);
  }
  return out;
}

std::vector<ABPair> lemma_orders() { return {{0.0, 0.0}, {1.0, 0.0}, {2.5, 0.0}}; }

std::vector<Block> default_blocks(SuiteId id) {
  const auto main = default_pq_set();
  switch (id) {
    case SuiteId::T1_1:
    case SuiteId::T1_2:
      return {{main, diagonal({1.0, 2.0, 3.5})}};
    case SuiteId::T1_3: {
      auto ab = cross({-2.0, -0.5, 0.0}, {-2.0, 0.0, 1.0, 3.0});
      ab.insert(ab.end(), {{0.25, 0.5}, {0.5, 0.5}, {0.5, 1.0}, {1.0, 1.0}});
      ab.insert(ab.end(), {{1.0, -5.0}, {2.0, 0.5}});  // probes
      return {{main, ab}};
    }
    case SuiteId::T1_4: {
      auto ab = cross({0.0, 0.5, 1.0}, {-2.0, -0.5, 0.0});
      ab.insert(ab.end(), {{0.5, 0.5}, {1.0, 0.5}, {0.75, 0.25}, {1.0, 1.0}});
      // probes: a < 0, b <= 0
      const auto literal = cross({-2.0, -0.5}, {-2.0, -0.5, 0.0});
      ab.insert(ab.end(), literal.begin(), literal.end());
      return {{main, ab}};
    }
    case SuiteId::T1_5:
      return {{{{1.5, 3.0}, {2.0, 2.0}, {1.2, 5.0}, {2.0, 4.0}},
               cross({-2.0, -0.5}, {-1.0, 0.0, 2.0})},
              {main, cross({-2.0, -0.5, 0.0}, {0.0, 2.0})}};
    case SuiteId::corollary_T1_5: {
      auto pq = main;
      pq.emplace_back(3.0, 3.0);
      return {{pq, {{0.0, 0.0}}}};
    }
    case SuiteId::L2_7:
      return {{main, {}}};
    case SuiteId::L2_8:
    case SuiteId::L2_9:
      return {{main, lemma_orders()}};
  }
  return {};
}

template <typename T>
void append_unique(std::vector<T>& into, const std::vector<T>& from) {
  for (const auto& x : from) {
    if (std::find(into.begin(), into.end(), x) == into.end()) {
      into.push_back(x);
    }
  }
}

std::vector<Block> blocks_for(SuiteId id, const SuiteOptions& o) {
  auto blocks = default_blocks(id);
  if (!o.pq_set && !o.ab_set) {
    return blocks;
  }
  Block merged;
  for (const auto& b : blocks) {
    append_unique(merged.pq, b.pq);
    append_unique(merged.ab, b.ab);
  }
  if (o.pq_set) {
    merged.pq = *o.pq_set;
  }
  if (o.ab_set) {
    merged.ab = *o.ab_set;
  }
  return {merged};
}

std::vector<TheoremTarget> theorem_targets(SuiteId id) {
  switch (id) {
    case SuiteId::T1_1:
      return {{FunctionTag::arcsin_pq, Direction::convex},
              {FunctionTag::arctan_pq, Direction::concave},
              {FunctionTag::arsinh_pq, Direction::concave, Spacing::logarithmic}};
    case SuiteId::T1_2:
      return {{FunctionTag::sin_pq, Direction::concave},
              {FunctionTag::cos_pq, Direction::convex},
              {FunctionTag::tan_pq, Direction::convex},
              {FunctionTag::sinh_pq, Direction::convex}};
    case SuiteId::T1_3:
      return {{FunctionTag::arcsin_pq, Direction::convex}};
    case SuiteId::T1_4:
      return {{FunctionTag::arsinh_pq, Direction::concave, Spacing::logarithmic}};
    case SuiteId::T1_5:
    case SuiteId::corollary_T1_5:
      return {{FunctionTag::pi_half_minus_arccos_pq, Direction::convex}};
    default:
      return {};
  }
}

std::vector<LemmaTarget> lemma_targets(SuiteId id) {
  if (id == SuiteId::L2_8) {
    return {{FunctionTag::arcsin_pq, Trend::increasing},
            {FunctionTag::arsinh_pq, Trend::decreasing, Spacing::logarithmic},
            {FunctionTag::arctan_pq, Trend::decreasing}};
  }
  return {{FunctionTag::sin_pq, Trend::decreasing},
          {FunctionTag::cos_pq, Trend::increasing},
          {FunctionTag::tan_pq, Trend::increasing},
          {FunctionTag::sinh_pq, Trend::increasing}};
}

int default_grid_n(SuiteId id) {
  switch (id) {
    case SuiteId::corollary_T1_5: return 30;
    case SuiteId::L2_7:
    case SuiteId::L2_8:
    case SuiteId::L2_9: return 50;
    default: return 20;
  }
}

Verdict classify(bool holds, bool probe) {
  if (probe) {
    return holds ? Verdict::probe_holds : Verdict::probe_violated;
  }
  return holds ? Verdict::holds : Verdict::violated;
}

Claim claim_of(Direction d) { return d == Direction::convex ? Claim::convex : Claim::concave; }

Claim claim_of(Trend t) { return t == Trend::increasing ? Claim::increasing : Claim::decreasing; }

void record_error(SuiteRow& row, const std::exception& e) {
  row.verdict = Verdict::error;
  row.message = e.what();
  row.methods_agree.reset();
}

SuiteRow theorem_row(SuiteId id, const TheoremTarget& t, const PQPair& pq, const ABPair& ab,
                     int n, const SuiteOptions& o) {
  SuiteRow row;
  row.suite = id;
  row.target = std::string(to_string(t.tag));
  row.claim = claim_of(t.direction);
  row.p = pq.first;
  row.q = pq.second;
  row.a = ab.first;
  row.b = ab.second;
  row.probe = !in_hypothesis(id, pq.first, pq.second, ab.first, ab.second);
  try {
    const TargetFunction f(t.tag, PQParams(pq.first, pq.second), o.cfg);
    const auto grid = GridSpec::over(f.suite_domain(), n, t.spacing);
    const auto v = check_ab_convex(f, ab.first, ab.second, grid, o.tol, t.direction);
    row.verdict = classify(v.holds, row.probe);
    row.gap = v.worst_gap;
    row.samples = v.samples_checked;
    if (v.witness) {
      row.witness_r = v.witness->r;
      row.witness_s = v.witness->s;
    }
    if (o.check_methods) {
      const auto c = check_derivative_criterion(f, ab.first, ab.second, grid, o.tol);
      row.criterion_trend = c.trend;
      row.methods_agree = c.supports(t.direction) == v.holds;
    }
  } catch (const std::exception& e) {
    record_error(row, e);
  }
  return row;
}

// Verdict from the trend classification; the gap and witness are the step
// that moves furthest against the expected direction.
void fill_monotone(SuiteRow& row, std::span<const double> xs, std::span<const double> gs,
                   Trend expected, double tol) {
  const bool holds = classify_trend(xs, gs, tol).trend == expected;
  row.verdict = classify(holds, row.probe);
  std::size_t worst = 0;
  double worst_step = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i + 1 < gs.size(); ++i) {
    const double d = gs[i + 1] - gs[i];
    const double against = expected == Trend::increasing ? -d : d;
    if (against > worst_step) {
      worst_step = against;
      worst = i;
    }
  }
  row.gap = worst_step;
  if (!holds) {
    row.witness_r = xs[worst];
    row.witness_s = xs[worst + 1];
  }
}

SuiteRow lemma_row(SuiteId id, const LemmaTarget& t, const PQPair& pq, double a, int n,
                   const SuiteOptions& o) {
  SuiteRow row;
  row.suite = id;
  row.target = std::string(to_string(t.tag));
  row.claim = claim_of(t.expected);
  row.p = pq.first;
  row.q = pq.second;
  row.a = a;
  row.probe = !in_hypothesis(id, pq.first, pq.second, a, 0.0);
  try {
    const TargetFunction f(t.tag, PQParams(pq.first, pq.second), o.cfg);
    const auto grid = GridSpec::over(f.suite_domain(), n, t.spacing);
    const auto xs = grid.points();
    std::vector<double> gs(xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i) {
      gs[i] = std::pow(f.value(xs[i]) / xs[i], a) * f.derivative(xs[i]);
    }
    row.samples = xs.size();
    fill_monotone(row, xs, gs, t.expected, o.tol);
  } catch (const std::exception& e) {
    record_error(row, e);
  }
  return row;
}

// Values increasing, and difference quotients positive with the given trend.
void l27_rows(std::vector<SuiteRow>& rows, FunctionTag tag, Direction shape, const PQPair& pq,
              int n, const SuiteOptions& o) {
  SuiteRow inc;
  inc.suite = SuiteId::L2_7;
  inc.target = std::string(to_string(tag));
  inc.claim = Claim::increasing;
  inc.p = pq.first;
  inc.q = pq.second;
  SuiteRow quot = inc;
  quot.target += ":quotients";
  quot.claim = claim_of(shape);
  try {
    const PQParams P(pq.first, pq.second);
    const TargetFunction f(tag, P, o.cfg);
    Interval dom = f.suite_domain();
    if (tag == FunctionTag::tan_pq) {
      dom = {0.0, pi_pq_half(P, o.cfg)};
    }
    const auto grid = GridSpec::over(dom, n);
    const auto xs = grid.points();
    std::vector<double> fx(xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i) {
      fx[i] = f.value(xs[i]);
    }
    inc.samples = xs.size();
    fill_monotone(inc, xs, fx, Trend::increasing, o.tol);

    std::vector<double> mids(xs.size() - 1);
    std::vector<double> dq(xs.size() - 1);
    bool positive = true;
    for (std::size_t i = 0; i + 1 < xs.size(); ++i) {
      mids[i] = 0.5 * (xs[i] + xs[i + 1]);
      dq[i] = (fx[i + 1] - fx[i]) / (xs[i + 1] - xs[i]);
      positive = positive && dq[i] > 0.0;
    }
    const Trend expected = shape == Direction::convex ? Trend::increasing : Trend::decreasing;
    quot.samples = dq.size();
    fill_monotone(quot, mids, dq, expected, o.tol);
    if (!positive) {
      quot.verdict = Verdict::violated;
    }
    if (o.check_methods) {
      const auto v = check_ab_convex(f, 1.0, 1.0, grid, o.tol, shape);
      quot.methods_agree = v.holds == (quot.verdict == Verdict::holds);
    }
  } catch (const std::exception& e) {
    record_error(inc, e);
    record_error(quot, e);
  }
  rows.push_back(std::move(inc));
  rows.push_back(std::move(quot));
}

}  // namespace

std::string_view to_string(SuiteId id) {
  for (const auto& [s, name] : kSuiteNames) {
    if (s == id) {
      return name;
    }
  }
  return "unknown";
}

std::optional<SuiteId> parse_suite_id(std::string_view name) {
  for (const auto& [s, n] : kSuiteNames) {
    if (n == name) {
      return s;
    }
  }
  return std::nullopt;
}

std::span<const SuiteId> all_suites() { return kAllSuites; }

std::string_view to_string(Claim c) {
  switch (c) {
    case Claim::convex: return "convex";
    case Claim::concave: return "concave";
    case Claim::increasing: return "increasing";
    case Claim::decreasing: return "decreasing";
  }
  return "unknown";
}

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::holds: return "holds";
    case Verdict::violated: return "violated";
    case Verdict::probe_holds: return "probe_holds";
    case Verdict::probe_violated: return "probe_violated";
    case Verdict::error: return "error";
  }
  return "unknown";
}

bool SuiteReport::passed() const { return failures() == 0; }

std::size_t SuiteReport::in_hypothesis() const {
  return static_cast<std::size_t>(
      std::count_if(rows.begin(), rows.end(), [](const SuiteRow& r) { return !r.probe; }));
}

std::size_t SuiteReport::failures() const {
  return static_cast<std::size_t>(std::count_if(rows.begin(), rows.end(), [](const SuiteRow& r) {
    return !r.probe && r.verdict != Verdict::holds;
  }));
}

std::size_t SuiteReport::probes() const { return rows.size() - in_hypothesis(); }

std::size_t SuiteReport::disagreements() const {
  return static_cast<std::size_t>(std::count_if(rows.begin(), rows.end(), [](const SuiteRow& r) {
    return r.methods_agree.has_value() && !*r.methods_agree;
  }));
}

std::vector<PQPair> default_pq_set() { return {{2.0, 2.0}, {3.0, 1.5}, {4.0, 3.0}, {1.2, 5.0}}; }

bool in_hypothesis(SuiteId id, double p, double q, double a, double b) {
  if (!(p > 1.0) || !(q > 1.0)) {
    return false;
  }
  switch (id) {
    case SuiteId::T1_1:
    case SuiteId::T1_2: return a >= 1.0 && b == a;
    case SuiteId::T1_3: return a <= 0.0 || (0.0 < a && a <= b && b <= 1.0);
    case SuiteId::T1_4: return (a >= 0.0 && b <= 0.0) || (0.0 < b && b <= a && a <= 1.0);
    case SuiteId::T1_5: return (p <= 2.0 && a < 0.0) || (a <= 0.0 && b >= 0.0);
    case SuiteId::corollary_T1_5: return a == 0.0 && b == 0.0;
    case SuiteId::L2_7: return true;
    case SuiteId::L2_8:
    case SuiteId::L2_9: return a >= 0.0;
  }
  return false;
}

SuiteReport run_theorem_suite(SuiteId id, const SuiteOptions& o) {
  SuiteReport report;
  report.suite = id;
  const int n = o.grid_n.value_or(default_grid_n(id));
  for (const auto& block : blocks_for(id, o)) {
    for (const auto& pq : block.pq) {
      if (id == SuiteId::L2_7) {
        l27_rows(report.rows, FunctionTag::tan_pq, Direction::convex, pq, n, o);
        l27_rows(report.rows, FunctionTag::arctan_pq, Direction::concave, pq, n, o);
        continue;
      }
      if (id == SuiteId::L2_8 || id == SuiteId::L2_9) {
        for (const auto& t : lemma_targets(id)) {
          for (const auto& ab : block.ab) {
            report.rows.push_back(lemma_row(id, t, pq, ab.first, n, o));
          }
        }
        continue;
      }
      for (const auto& t : theorem_targets(id)) {
        for (const auto& ab : block.ab) {
          report.rows.push_back(theorem_row(id, t, pq, ab, n, o));
        }
      }
    }
  }
  return report;
}

}  // namespace pqtrig
