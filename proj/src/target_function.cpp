#include "pqtrig/target_function.hpp"

#include <array>
#include <cmath>
#include <utility>

#include "pqtrig/errors.hpp"

namespace pqtrig {

namespace {

constexpr std::array<std::pair<FunctionTag, std::string_view>, 10> kNames{{
    {FunctionTag::arcsin_pq, "arcsin_pq"},
    {FunctionTag::arccos_pq, "arccos_pq"},
    {FunctionTag::arsinh_pq, "arsinh_pq"},
    {FunctionTag::arctan_pq, "arctan_pq"},
    {FunctionTag::sin_pq, "sin_pq"},
    {FunctionTag::cos_pq, "cos_pq"},
    {FunctionTag::tan_pq, "tan_pq"},
    {FunctionTag::sinh_pq, "sinh_pq"},
    {FunctionTag::pi_half_minus_arccos_pq, "pi_half_minus_arccos_pq"},
    {FunctionTag::custom, "custom"},
}};

Interval default_domain(FunctionTag tag) {
  if (tag == FunctionTag::arsinh_pq) {
    return {0.0, kArsinhDomainMax};
  }
  return {0.0, 1.0};
}

}  // namespace

std::string_view to_string(FunctionTag tag) {
  for (const auto& [t, name] : kNames) {
    if (t == tag) {
      return name;
    }
  }
  return "unknown";
}

std::optional<FunctionTag> parse_function_tag(std::string_view name) {
  for (const auto& [t, n] : kNames) {
    if (n == name) {
      return t;
    }
  }
  return std::nullopt;
}

TargetFunction::TargetFunction(FunctionTag tag, PQParams params, NumericConfig cfg)
    : TargetFunction(tag, std::move(params), cfg, std::string(to_string(tag)),
                     default_domain(tag)) {
  if (tag == FunctionTag::custom) {
    throw InvalidParameter("TargetFunction: use TargetFunction::custom for custom functions");
  }
}

TargetFunction::TargetFunction(FunctionTag tag, PQParams params, NumericConfig cfg,
                               std::string name, Interval domain)
    : tag_(tag), params_(std::move(params)), cfg_(cfg), name_(std::move(name)), domain_(domain) {}

TargetFunction TargetFunction::custom(std::string name, std::function<double(double)> f,
                                      Interval domain, std::function<double(double)> derivative) {
  // The (p, q) pair is unused for custom functions.
  TargetFunction t(FunctionTag::custom, PQParams(2.0, 2.0), {}, std::move(name), domain);
  t.custom_f_ = std::move(f);
  t.custom_df_ = std::move(derivative);
  return t;
}

double TargetFunction::value(double x) const {
  const auto& P = params_;
  switch (tag_) {
    case FunctionTag::arcsin_pq: return arcsin_pq(P, x, cfg_);
    case FunctionTag::arccos_pq: return arccos_pq(P, x, cfg_);
    case FunctionTag::arsinh_pq: return arsinh_pq(P, x, cfg_);
    case FunctionTag::arctan_pq: return arctan_pq(P, x, cfg_);
    case FunctionTag::sin_pq: return sin_pq(P, x, cfg_);
    case FunctionTag::cos_pq: return cos_pq(P, x, cfg_);
    case FunctionTag::tan_pq: return tan_pq(P, x, cfg_);
    case FunctionTag::sinh_pq: return sinh_pq(P, x, cfg_);
    case FunctionTag::pi_half_minus_arccos_pq: return half_pi_minus_arccos_pq(P, x, cfg_);
    case FunctionTag::custom: return custom_f_(x);
  }
  return std::nan("");
}

double TargetFunction::derivative(double x) const {
  const auto& P = params_;
  switch (tag_) {
    case FunctionTag::arcsin_pq: return d_arcsin_pq(P, x);
    case FunctionTag::arccos_pq: return d_arccos_pq(P, x);
    case FunctionTag::arsinh_pq: return d_arsinh_pq(P, x);
    case FunctionTag::arctan_pq: return d_arctan_pq(P, x, cfg_);
    case FunctionTag::sin_pq: return d_sin_pq(P, x, cfg_);
    case FunctionTag::cos_pq: return d_cos_pq(P, x, cfg_);
    case FunctionTag::tan_pq: return d_tan_pq(P, x, cfg_);
    case FunctionTag::sinh_pq: return d_sinh_pq(P, x, cfg_);
    case FunctionTag::pi_half_minus_arccos_pq: return d_half_pi_minus_arccos_pq(P, x);
    case FunctionTag::custom: {
      if (custom_df_) {
        return custom_df_(x);
      }
      const double h = 1e-6 * std::max(1.0, std::abs(x));
      return (custom_f_(x + h) - custom_f_(x - h)) / (2.0 * h);
    }
  }
  return std::nan("");
}

}  // namespace pqtrig
