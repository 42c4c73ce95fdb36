#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pqtrig/convexity.hpp"
#include "pqtrig/numeric_config.hpp"

namespace pqtrig {

enum class SuiteId { T1_1, T1_2, T1_3, T1_4, T1_5, corollary_T1_5, L2_7, L2_8, L2_9 };

std::string_view to_string(SuiteId id);
std::optional<SuiteId> parse_suite_id(std::string_view name);
std::span<const SuiteId> all_suites();

/// Statement being checked: (a,b)-convexity or concavity for the theorem
/// suites, a monotonicity claim for the lemma suites.
enum class Claim { convex, concave, increasing, decreasing };

std::string_view to_string(Claim c);

enum class Verdict { holds, violated, probe_holds, probe_violated, error };

std::string_view to_string(Verdict v);

struct SuiteRow {
  SuiteId suite = SuiteId::T1_1;
  std::string target;  // e.g. "arcsin_pq" or "tan_pq:quotients"
  Claim claim = Claim::convex;
  double p = 0.0;
  double q = 0.0;
  std::optional<double> a;
  std::optional<double> b;
  bool probe = false;  // outside the statement's hypotheses
  Verdict verdict = Verdict::holds;
  double gap = 0.0;
  std::optional<double> witness_r;
  std::optional<double> witness_s;
  std::size_t samples = 0;
  /// Whether the second method reached the same verdict; absent when the row
  /// has no second method or errored.
  std::optional<bool> methods_agree;
  std::optional<Trend> criterion_trend;
  std::string message;  // error text for Verdict::error
};

struct SuiteReport {
  SuiteId suite = SuiteId::T1_1;
  std::vector<SuiteRow> rows;

  /// True iff every in-hypothesis row holds.
  bool passed() const;
  std::size_t in_hypothesis() const;
  std::size_t failures() const;
  std::size_t probes() const;
  std::size_t disagreements() const;
};

using PQPair = std::pair<double, double>;
using ABPair = std::pair<double, double>;

/// Overrides for the default parameter sets. For the lemma suites only the
/// first component of each (a, b) pair is used.
struct SuiteOptions {
  double tol = 1e-9;
  std::optional<int> grid_n;
  std::optional<std::vector<PQPair>> pq_set;
  std::optional<std::vector<ABPair>> ab_set;
  NumericConfig cfg{};
  bool check_methods = true;
};

/// Whether (p, q, a, b) lies inside the hypotheses of the suite's statement.
bool in_hypothesis(SuiteId id, double p, double q, double a, double b);

SuiteReport run_theorem_suite(SuiteId id, const SuiteOptions& options = {});

/// The (p,q) set used by most suites: (2,2), (3,1.5), (4,3), (1.2,5).
std::vector<PQPair> default_pq_set();

}  // namespace pqtrig
