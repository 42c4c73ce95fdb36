#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "pqtrig/convexity.hpp"
#include "pqtrig/csv.hpp"
#include "pqtrig/errors.hpp"
#include "pqtrig/lame.hpp"
#include "pqtrig/report.hpp"
#include "pqtrig/suites.hpp"
#include "pqtrig/target_function.hpp"

namespace pqtrig::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct CliConfig {
  double p = 2.0;
  double q = 2.0;
  std::string fn;
  double a = 1.0;
  double b = 1.0;
  int n = 100;
  std::optional<double> lo;
  std::optional<double> hi;
  double tol = 1e-9;
  std::string out;
  std::uint64_t seed = 0;
  std::size_t pairs = 0;
  std::string suite = "all";
  std::string format = "csv";
  bool concave = false;
};

std::string num(double x) { return csv::format_double(x); }

void check_pq(const CliConfig& c) {
  if (!(c.p > 1.0)) {
    throw UsageError("p must be > 1, got " + num(c.p));
  }
  if (!(c.q > 1.0)) {
    throw UsageError("q must be > 1, got " + num(c.q));
  }
}

void check_common(const CliConfig& c) {
  check_pq(c);
  if (c.n < 2) {
    throw UsageError("n must be >= 2, got " + std::to_string(c.n));
  }
  if (!(c.tol > 0.0)) {
    throw UsageError("tol must be > 0, got " + num(c.tol));
  }
}

TargetFunction make_function(const CliConfig& c) {
  if (c.fn == "identity") {
    return TargetFunction::custom("identity", [](double x) { return x; }, {0.0, 1.0},
                                  [](double) { return 1.0; });
  }
  const auto tag = parse_function_tag(c.fn);
  if (!tag || *tag == FunctionTag::custom) {
    throw UsageError("unknown function '" + c.fn + "'");
  }
  return TargetFunction(*tag, PQParams(c.p, c.q));
}

Interval domain_of(const CliConfig& c, const TargetFunction& f) {
  Interval d = f.suite_domain();
  d.lo = c.lo.value_or(d.lo);
  d.hi = c.hi.value_or(d.hi);
  if (!(d.lo < d.hi)) {
    throw UsageError("lo must be < hi, got [" + num(d.lo) + ", " + num(d.hi) + "]");
  }
  return d;
}

int cmd_tab(const CliConfig& c, std::ostream& out) {
  check_common(c);
  const auto f = make_function(c);
  const auto grid = GridSpec::over(domain_of(c, f), c.n);
  out << "x,f(x)\n";
  for (double x : grid.points()) {
    csv::write_row(out, {num(x), num(f.value(x))});
  }
  return kPass;
}

int cmd_curve(const CliConfig& c, std::ostream& out) {
  check_common(c);
  const PQParams P(c.p, c.q);
  auto samples = extend_four_quadrants(sample_curve_C(P, c.n + 2));
  const auto d = extend_four_quadrants(sample_curve_D(P, c.n));
  samples.insert(samples.end(), d.begin(), d.end());
  write_curve_csv(out, samples);
  return kPass;
}

int cmd_verify(const CliConfig& c, const CLI::App& sub, std::ostream& out) {
  std::vector<SuiteId> ids;
  if (c.suite == "all") {
    ids.assign(all_suites().begin(), all_suites().end());
  } else if (const auto id = parse_suite_id(c.suite)) {
    ids.push_back(*id);
  } else {
    throw UsageError("unknown suite '" + c.suite + "'");
  }
  if (!(c.tol > 0.0)) {
    throw UsageError("tol must be > 0, got " + num(c.tol));
  }
  SuiteOptions o;
  o.tol = c.tol;
  if (sub.count("--n") > 0) {
    if (c.n < 2) {
      throw UsageError("n must be >= 2, got " + std::to_string(c.n));
    }
    o.grid_n = c.n;
  }
  if (sub.count("--p") > 0 || sub.count("--q") > 0) {
    check_pq(c);
    o.pq_set = std::vector<PQPair>{{c.p, c.q}};
  }
  const bool has_a = sub.count("--a") > 0;
  const bool has_b = sub.count("--b") > 0;
  if (has_a || has_b) {
    const double a = has_a ? c.a : c.b;
    const double b = has_b ? c.b : c.a;
    o.ab_set = std::vector<ABPair>{{a, b}};
  }
  std::vector<SuiteReport> reports;
  for (auto id : ids) {
    reports.push_back(run_theorem_suite(id, o));
  }
  write_report(out, reports, c.format == "text" ? ReportFormat::text : ReportFormat::csv);
  const bool ok = std::all_of(reports.begin(), reports.end(),
                              [](const SuiteReport& r) { return r.passed(); });
  return ok ? kPass : kViolation;
}

int cmd_sweep(const CliConfig& c, std::ostream& out) {
  check_common(c);
  const auto f = make_function(c);
  auto grid = GridSpec::over(domain_of(c, f), c.n,
                             f.tag() == FunctionTag::arsinh_pq && !c.lo ? Spacing::logarithmic
                                                                        : Spacing::linear);
  if (c.pairs > 0) {
    grid.pair_mode = RandomPairs{c.pairs, c.seed};
  }
  const Direction dir = c.concave ? Direction::concave : Direction::convex;
  out << "a,b,verdict,gap\n";
  for (int i = 0; i <= 8; ++i) {
    for (int j = 0; j <= 8; ++j) {
      const double a = -2.0 + 0.5 * i;
      const double b = -2.0 + 0.5 * j;
      const auto v = check_ab_convex(f, a, b, grid, c.tol, dir);
      csv::write_row(out, {num(a), num(b), v.holds ? "holds" : "violated", num(v.worst_gap)});
    }
  }
  return kPass;
}

void add_pq(CLI::App* s, CliConfig& c) {
  s->add_option("--p", c.p, "exponent p > 1")->capture_default_str();
  s->add_option("--q", c.q, "exponent q > 1")->capture_default_str();
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CliConfig c;
  CLI::App app{"(p,q)-trigonometric functions and power-mean convexity checks", "pqtrig"};
  app.require_subcommand(1);

  auto* tab = app.add_subcommand("tab", "tabulate x,f(x) on the function's domain");
  auto* curve = app.add_subcommand("curve", "Lame curve samples, both parametrizations");
  auto* verify = app.add_subcommand("verify", "run theorem and lemma suites");
  auto* sweep = app.add_subcommand("sweep", "(a,b) lattice of convexity verdicts");

  for (auto* s : {tab, curve, verify, sweep}) {
    add_pq(s, c);
    s->add_option("--n", c.n, "grid points")->capture_default_str();
    s->add_option("--tol", c.tol, "slack tolerance")->capture_default_str();
    s->add_option("--out", c.out, "output file (default stdout)");
    s->add_option("--seed", c.seed, "seed for random pairs")->capture_default_str();
  }
  for (auto* s : {tab, sweep}) {
    s->add_option("--fn", c.fn, "function name, or identity")->required();
    s->add_option("--lo", c.lo, "domain lower end");
    s->add_option("--hi", c.hi, "domain upper end");
  }
  verify->add_option("--suite", c.suite, "suite name or all")->capture_default_str();
  verify->add_option("--a", c.a, "order a (forces a single configuration)");
  verify->add_option("--b", c.b, "order b (forces a single configuration)");
  for (auto* s : {verify}) {
    s->add_option("--format", c.format, "csv or text")
        ->check(CLI::IsMember({"csv", "text"}))
        ->capture_default_str();
  }
  sweep->add_flag("--concave", c.concave, "check concavity instead of convexity");
  sweep->add_option("--pairs", c.pairs, "random pairs per point (0 = all pairs)")
      ->capture_default_str();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "pqtrig: " << e.what() << '\n';
    return kUsage;
  }

  std::ofstream file;
  std::ostringstream buffer;
  try {
    int code = kPass;
    if (tab->parsed()) {
      code = cmd_tab(c, buffer);
    } else if (curve->parsed()) {
      code = cmd_curve(c, buffer);
    } else if (verify->parsed()) {
      code = cmd_verify(c, *verify, buffer);
    } else {
      code = cmd_sweep(c, buffer);
    }
    if (c.out.empty()) {
      out << buffer.str();
    } else {
      file.open(c.out);
      if (!file) {
        err << "pqtrig: cannot open " << c.out << '\n';
        return kUsage;
      }
      file << buffer.str();
    }
    return code;
  } catch (const UsageError& e) {
    err << "pqtrig: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "pqtrig: " << e.what() << '\n';
    return kUsage;
  }
}

}  // namespace pqtrig::cli
