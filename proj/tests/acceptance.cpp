// Acceptance criteria AC1..AC10. With no arguments every criterion runs;
// otherwise only the named ones. One PASS/FAIL line per criterion, with
// indented detail lines under failures. Exit status is nonzero iff a
// selected criterion fails.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "pqtrig/lame.hpp"
#include "pqtrig/pq_functions.hpp"
#include "pqtrig/power_mean.hpp"
#include "pqtrig/suites.hpp"

using namespace pqtrig;

namespace {

struct Outcome {
  bool pass = true;
  std::string summary;
  std::vector<std::string> details;
};

std::vector<double> interior(double lo, double hi, int n) {
  std::vector<double> xs;
  for (int i = 1; i <= n; ++i) {
    xs.push_back(lo + (hi - lo) * i / (n + 1));
  }
  return xs;
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

// Tracks the largest error and where it happened.
struct MaxErr {
  double value = 0.0;
  std::string where;
  void add(double err, const std::string& at) {
    if (!(err <= value)) {
      value = err;
      where = at;
    }
  }
};

const std::vector<std::pair<double, double>> kPQ{{2, 2},   {3, 1.5}, {4, 3},
                                                 {1.2, 5}, {1.5, 4.7}, {4.7, 1.5}};

std::string pq_str(double p, double q) { return "p=" + fmt(p) + " q=" + fmt(q); }

Outcome ac1() {
  const PQParams P(2, 2);
  MaxErr err;
  const std::pair<const char*, std::function<double(double)>> fns[] = {
      {"arcsin", [&](double x) { return arcsin_pq(P, x) - std::asin(x); }},
      {"arccos", [&](double x) { return arccos_pq(P, x) - std::acos(x); }},
      {"arsinh", [&](double x) { return arsinh_pq(P, x) - std::asinh(x); }},
      {"arctan", [&](double x) { return arctan_pq(P, x) - std::atan(x); }},
      {"sin", [&](double x) { return sin_pq(P, x) - std::sin(x); }},
      {"cos", [&](double x) { return cos_pq(P, x) - std::cos(x); }},
      {"tan", [&](double x) { return tan_pq(P, x) - std::tan(x); }},
      {"sinh", [&](double x) { return sinh_pq(P, x) - std::sinh(x); }},
  };
  for (const auto& [name, diff] : fns) {
    for (double x : interior(0.0, 1.0, 50)) {
      err.add(std::abs(diff(x)), std::string(name) + " x=" + fmt(x));
    }
  }
  for (double x : interior(0.0, 50.0, 50)) {
    err.add(std::abs(arsinh_pq(P, x) - std::asinh(x)), "arsinh x=" + fmt(x));
  }
  const double hp = std::abs(pi_pq_half(P) - std::numbers::pi / 2);
  Outcome o;
  o.pass = err.value < 1e-10 && hp < 1e-12;
  o.summary = "classical reduction at p=q=2: max error " + fmt(err.value) + " (" + err.where +
              "), half-period error " + fmt(hp);
  return o;
}

Outcome ac2() {
  MaxErr err;
  for (double p : {1.5, 2.0, 3.0, 4.7}) {
    for (double q : {1.5, 2.0, 3.0, 4.7}) {
      const PQParams P(p, q);
      for (double x : interior(0.0, pi_pq_half(P), 50)) {
        const auto sc = sin_cos_pq(P, x);
        err.add(std::abs(std::pow(sc.sin, q) + std::pow(sc.cos, p) - 1.0),
                pq_str(p, q) + " x=" + fmt(x));
      }
    }
  }
  Outcome o;
  o.pass = err.value < 1e-9;
  o.summary = "sin^q + cos^p = 1: max residual " + fmt(err.value) + " (" + err.where + ")";
  return o;
}

Outcome ac3() {
  MaxErr path;
  MaxErr repr;
  for (auto [p, q] : kPQ) {
    const PQParams P(p, q);
    for (double x : interior(0.0, 1.0, 50)) {
      path.add(std::abs(arcsin_pq(P, x) - quad_oracle(OracleKind::arcsin, P, x)),
               "arcsin " + pq_str(p, q) + " x=" + fmt(x));
    }
    for (double x : interior(0.0, kArsinhDomainMax, 50)) {
      path.add(std::abs(arsinh_pq(P, x) - quad_oracle(OracleKind::arsinh, P, x)),
               "arsinh " + pq_str(p, q) + " x=" + fmt(x));
    }
    for (double x : interior(0.3, 0.99, 50)) {
      repr.add(std::abs(arsinh_pq_direct(P, x) - arsinh_pq_transformed(P, x)),
               pq_str(p, q) + " x=" + fmt(x));
    }
  }
  Outcome o;
  o.pass = path.value < 1e-9 && repr.value < 1e-10;
  o.summary = "series vs quadrature: max diff " + fmt(path.value) + " (" + path.where +
              "); arsinh representations: max diff " + fmt(repr.value);
  return o;
}

Outcome ac4() {
  MaxErr err;
  for (auto [p, q] : kPQ) {
    const PQParams P(p, q);
    const std::string tag = pq_str(p, q);
    for (double x : interior(0.0, 1.0, 50)) {
      err.add(std::abs(arcsin_pq(P, sin_pq(P, x)) - x), "arcsin(sin) " + tag);
      err.add(std::abs(arccos_pq(P, cos_pq(P, x)) - x), "arccos(cos) " + tag);
      err.add(std::abs(arsinh_pq(P, sinh_pq(P, x)) - x), "arsinh(sinh) " + tag);
      err.add(std::abs(tan_pq(P, arctan_pq(P, x)) - x), "tan(arctan) " + tag);
      err.add(std::abs(sin_pq(P, arcsin_pq(P, x)) - x), "sin(arcsin) " + tag);
    }
    // arctan is defined on (0, 1), so tan is sampled below arctan(1).
    const double top = arctan_pq(P, 1.0 - 1e-9);
    for (double x : interior(0.0, top, 50)) {
      err.add(std::abs(arctan_pq(P, tan_pq(P, x)) - x), "arctan(tan) " + tag);
    }
  }
  Outcome o;
  o.pass = err.value < 1e-10;
  o.summary = "inverse round trips: max error " + fmt(err.value) + " (" + err.where + ")";
  return o;
}

Outcome ac5() {
  const double h = 1e-6;
  MaxErr err;
  for (auto [p, q] : kPQ) {
    const PQParams P(p, q);
    const double hp = pi_pq_half(P);
    const auto check = [&](const char* name, auto f, auto df, double x) {
      const double fd = (f(x + h) - f(x - h)) / (2 * h);
      err.add(std::abs(df(x) - fd), std::string(name) + " " + pq_str(p, q) + " x=" + fmt(x));
    };
    for (double x : interior(0.0, hp, 40)) {
      check("sin", [&](double t) { return sin_pq(P, t); }, [&](double t) { return d_sin_pq(P, t); },
            x);
      check("cos", [&](double t) { return cos_pq(P, t); }, [&](double t) { return d_cos_pq(P, t); },
            x);
      if (x < 0.9 * hp) {
        check("tan", [&](double t) { return tan_pq(P, t); },
              [&](double t) { return d_tan_pq(P, t); }, x);
      }
    }
    for (double x : interior(0.0, 1.0, 40)) {
      if (x < 0.95) {
        check("arcsin", [&](double t) { return arcsin_pq(P, t); },
              [&](double t) { return d_arcsin_pq(P, t); }, x);
      }
      check("arctan", [&](double t) { return arctan_pq(P, t); },
            [&](double t) { return d_arctan_pq(P, t); }, x);
      check("sinh", [&](double t) { return sinh_pq(P, t); },
            [&](double t) { return d_sinh_pq(P, t); }, x);
    }
    for (double x : interior(0.0, 10.0, 40)) {
      check("arsinh", [&](double t) { return arsinh_pq(P, t); },
            [&](double t) { return d_arsinh_pq(P, t); }, x);
    }
  }
  Outcome o;
  o.pass = err.value < 1e-5;
  o.summary = "derivatives vs central differences (h=1e-6): max error " + fmt(err.value) + " (" +
              err.where + ")";
  return o;
}

std::vector<SuiteReport> run_all_suites() {
  std::vector<SuiteReport> out;
  for (auto id : all_suites()) {
    out.push_back(run_theorem_suite(id));
  }
  return out;
}

std::string describe(const SuiteRow& r) {
  std::ostringstream s;
  s << to_string(r.suite) << ":" << r.target << " " << to_string(r.claim) << " "
    << pq_str(r.p, r.q);
  if (r.a) {
    s << " a=" << fmt(*r.a);
  }
  if (r.b) {
    s << " b=" << fmt(*r.b);
  }
  s << " -> " << to_string(r.verdict) << " gap=" << fmt(r.gap);
  if (r.witness_r) {
    s << " at (" << fmt(*r.witness_r) << ", " << fmt(*r.witness_s) << ")";
  }
  if (!r.message.empty()) {
    s << " [" << r.message << "]";
  }
  return s.str();
}

Outcome ac6() {
  Outcome o;
  std::string failing;
  for (const auto& rep : run_all_suites()) {
    if (rep.passed()) {
      continue;
    }
    o.pass = false;
    failing += " " + std::string(to_string(rep.suite)) + "(" + std::to_string(rep.failures()) +
               "/" + std::to_string(rep.in_hypothesis()) + ")";
    for (const auto& r : rep.rows) {
      if (!r.probe && r.verdict != Verdict::holds) {
        o.details.push_back(describe(r));
      }
    }
  }
  o.summary = o.pass ? "all nine suites hold on every in-hypothesis configuration"
                     : "suites with in-hypothesis violations:" + failing;
  return o;
}

Outcome ac7() {
  Outcome o;
  std::size_t compared = 0;
  for (const auto& rep : run_all_suites()) {
    for (const auto& r : rep.rows) {
      if (r.verdict == Verdict::error) {
        o.pass = false;
        o.details.push_back(describe(r));
      } else if (r.methods_agree) {
        ++compared;
        if (!*r.methods_agree) {
          o.pass = false;
          o.details.push_back(describe(r) + " criterion=" +
                              std::string(to_string(*r.criterion_trend)));
        }
      }
    }
  }
  o.summary = "derivative criterion vs pairwise check: " + std::to_string(compared) +
              " configurations compared, " + std::to_string(o.details.size()) +
              " disagreements or errors";
  return o;
}

Outcome ac8() {
  std::mt19937_64 rng(20260101);
  std::uniform_real_distribution<double> order(-10.0, 10.0);
  std::uniform_real_distribution<double> logx(std::log(1e-3), std::log(1e3));
  std::size_t bad = 0;
  double worst = -INFINITY;
  for (int i = 0; i < 10000; ++i) {
    double a = order(rng), b = order(rng);
    if (a > b) {
      std::swap(a, b);
    }
    const double x = std::exp(logx(rng)), y = std::exp(logx(rng));
    const double excess = power_mean(a, x, y) - power_mean(b, x, y);
    worst = std::max(worst, excess);
    if (excess > 1e-12) {
      ++bad;
    }
  }
  Outcome o;
  o.pass = bad == 0;
  o.summary = "power-mean order monotonicity on 10000 samples: " + std::to_string(bad) +
              " violations, max M_a - M_b = " + fmt(worst);
  return o;
}

Outcome ac9() {
  MaxErr err;
  for (double p : {1.5, 2.0, 3.0, 4.0, 10.0}) {
    const double beta = std::numbers::pi / (p * std::sin(std::numbers::pi / p));
    err.add(std::abs(pi_pq_half(PQParams(p, p)) - beta), "p=" + fmt(p));
  }
  Outcome o;
  o.pass = err.value < 1e-10;
  o.summary = "half-period vs pi/(p sin(pi/p)): max error " + fmt(err.value) + " (" + err.where +
              ")";
  return o;
}

Outcome ac10() {
  double rc = 0.0;
  double rd = 0.0;
  for (auto [p, q] : kPQ) {
    const PQParams P(p, q);
    for (const auto& s : extend_four_quadrants(sample_curve_C(P, 200))) {
      rc = std::max(rc, std::abs(curve_residual(P, s)));
    }
    for (const auto& s : extend_four_quadrants(sample_curve_D(P, 200))) {
      rd = std::max(rd, std::abs(curve_residual(P, s)));
    }
  }
  const PQParams P(4, 3);
  const auto c = sample_curve_C(P, 200);
  const double dist = curve_set_distance(c, sample_curve_D(P, 200));
  const double spacing = mean_arc_spacing(c);
  Outcome o;
  o.pass = rc < 1e-12 && rd < 1e-9 && dist < 2.0 * spacing;
  o.summary = "Lame curve: C residual " + fmt(rc) + ", D residual " + fmt(rd) +
              ", C/D set distance " + fmt(dist) + " vs 2x spacing " + fmt(2.0 * spacing);
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"AC1", ac1}, {"AC2", ac2}, {"AC3", ac3}, {"AC4", ac4}, {"AC5", ac5},
      {"AC6", ac6}, {"AC7", ac7}, {"AC8", ac8}, {"AC9", ac9}, {"AC10", ac10},
  };
  std::vector<std::string> wanted(argv + 1, argv + argc);
  for (const auto& w : wanted) {
    if (std::none_of(criteria.begin(), criteria.end(), [&](const auto& c) { return c.first == w; })) {
      std::fprintf(stderr, "unknown criterion %s\n", w.c_str());
      return 2;
    }
  }
  int failed = 0;
  for (const auto& [name, fn] : criteria) {
    if (!wanted.empty() && std::find(wanted.begin(), wanted.end(), name) == wanted.end()) {
      continue;
    }
    Outcome o;
    try {
      o = fn();
    } catch (const std::exception& e) {
      o.pass = false;
      o.summary = std::string("exception: ") + e.what();
    }
    std::printf("%-4s %s  %s\n", name.c_str(), o.pass ? "PASS" : "FAIL", o.summary.c_str());
    for (const auto& d : o.details) {
      std::printf("       %s\n", d.c_str());
    }
    failed += o.pass ? 0 : 1;
  }
  return failed == 0 ? 0 : 1;
}
