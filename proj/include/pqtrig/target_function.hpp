#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>

#include "pqtrig/numeric_config.hpp"
#include "pqtrig/pq_functions.hpp"

namespace pqtrig {

enum class FunctionTag {
  arcsin_pq,
  arccos_pq,
  arsinh_pq,
  arctan_pq,
  sin_pq,
  cos_pq,
  tan_pq,
  sinh_pq,
  pi_half_minus_arccos_pq,
  custom,
};

std::string_view to_string(FunctionTag tag);
std::optional<FunctionTag> parse_function_tag(std::string_view name);

/// Upper end of the truncated (0, inf) domain of arsinh_{p,q}.
inline constexpr double kArsinhDomainMax = 50.0;

struct Interval {
  double lo = 0.0;
  double hi = 1.0;
};

/// A real function of one variable, positive on its suite domain, with a
/// derivative. Built-in tags evaluate the (p,q)-functions with their
/// closed-form derivatives; custom functions fall back to central
/// differences when no derivative is supplied.
class TargetFunction {
 public:
  TargetFunction(FunctionTag tag, PQParams params, NumericConfig cfg = {});

  static TargetFunction custom(std::string name, std::function<double(double)> f,
                               Interval domain,
                               std::function<double(double)> derivative = {});

  double value(double x) const;
  double derivative(double x) const;

  FunctionTag tag() const { return tag_; }
  const std::string& name() const { return name_; }
  const PQParams& params() const { return params_; }

  /// Interval on which the convexity statements are made: (0, 1) for every
  /// built-in tag except arsinh_pq, which uses (0, kArsinhDomainMax].
  Interval suite_domain() const { return domain_; }

 private:
  TargetFunction(FunctionTag tag, PQParams params, NumericConfig cfg, std::string name,
                 Interval domain);

  FunctionTag tag_;
  PQParams params_;
  NumericConfig cfg_;
  std::string name_;
  Interval domain_;
  std::function<double(double)> custom_f_;
  std::function<double(double)> custom_df_;
};

}  // namespace pqtrig
