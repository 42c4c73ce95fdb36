#include <gtest/gtest.h>

#include <sstream>

#include "pqtrig/power_mean.hpp"
#include "pqtrig/report.hpp"
#include "pqtrig/suites.hpp"

using namespace pqtrig;

namespace {

std::string csv_of(const SuiteReport& r) {
  std::ostringstream out;
  write_report_csv(out, std::span<const SuiteReport>(&r, 1));
  return out.str();
}

}  // namespace

TEST(Names, RoundTrip) {
  for (auto id : all_suites()) {
    EXPECT_EQ(parse_suite_id(to_string(id)), id);
  }
  EXPECT_FALSE(parse_suite_id("T9_9"));
  EXPECT_EQ(all_suites().size(), 9u);
}

TEST(Hypotheses, Regions) {
  EXPECT_TRUE(in_hypothesis(SuiteId::T1_1, 2, 2, 1, 1));
  EXPECT_FALSE(in_hypothesis(SuiteId::T1_1, 2, 2, 0.5, 0.5));
  EXPECT_TRUE(in_hypothesis(SuiteId::T1_3, 2, 2, -2, 3));
  EXPECT_TRUE(in_hypothesis(SuiteId::T1_3, 2, 2, 0.5, 1));
  EXPECT_FALSE(in_hypothesis(SuiteId::T1_3, 2, 2, 1, -5));
  EXPECT_FALSE(in_hypothesis(SuiteId::T1_3, 2, 2, 2, 0.5));
  EXPECT_TRUE(in_hypothesis(SuiteId::T1_4, 2, 2, 0.5, -2));
  EXPECT_TRUE(in_hypothesis(SuiteId::T1_4, 2, 2, 1, 0.5));
  EXPECT_FALSE(in_hypothesis(SuiteId::T1_4, 2, 2, -2, -2));
  EXPECT_TRUE(in_hypothesis(SuiteId::T1_5, 1.5, 3, -2, -1));
  EXPECT_FALSE(in_hypothesis(SuiteId::T1_5, 3, 1.5, -2, -1));
  EXPECT_TRUE(in_hypothesis(SuiteId::T1_5, 3, 1.5, 0, 2));
  EXPECT_TRUE(in_hypothesis(SuiteId::corollary_T1_5, 3, 3, 0, 0));
  EXPECT_FALSE(in_hypothesis(SuiteId::L2_8, 2, 2, -1, 0));
}

TEST(Suites, Holding) {
  for (auto id : {SuiteId::T1_1, SuiteId::T1_4, SuiteId::corollary_T1_5, SuiteId::L2_7,
                  SuiteId::L2_8}) {
    const auto r = run_theorem_suite(id);
    EXPECT_TRUE(r.passed()) << to_string(id);
    EXPECT_GT(r.in_hypothesis(), 0u);
    EXPECT_EQ(r.disagreements(), 0u) << to_string(id);
  }
}

TEST(Suites, ClassicalArsinhConcave) {
  SuiteOptions o;
  o.pq_set = std::vector<PQPair>{{2, 2}};
  o.ab_set = std::vector<ABPair>{{1, 1}};
  const auto r = run_theorem_suite(SuiteId::T1_4, o);
  ASSERT_EQ(r.rows.size(), 1u);
  EXPECT_EQ(r.rows[0].verdict, Verdict::holds);
}

TEST(Suites, CorollaryAtThreeThree) {
  SuiteOptions o;
  o.pq_set = std::vector<PQPair>{{3, 3}};
  const auto r = run_theorem_suite(SuiteId::corollary_T1_5, o);
  ASSERT_EQ(r.rows.size(), 1u);
  EXPECT_EQ(r.rows[0].verdict, Verdict::holds);
  EXPECT_EQ(r.rows[0].samples, 30u * 29u / 2u);
}

TEST(Suites, ForcedProbeNeverFails) {
  SuiteOptions o;
  o.ab_set = std::vector<ABPair>{{1, -5}};
  const auto r = run_theorem_suite(SuiteId::T1_3, o);
  EXPECT_TRUE(r.passed());
  EXPECT_EQ(r.probes(), r.rows.size());
  for (const auto& row : r.rows) {
    EXPECT_EQ(row.verdict, Verdict::probe_violated);
    EXPECT_TRUE(row.witness_r && row.witness_s);
  }
}

TEST(Suites, DetectsViolationInsideStatedRegion) {
  SuiteOptions o;
  o.pq_set = std::vector<PQPair>{{2, 2}};
  o.ab_set = std::vector<ABPair>{{0, -2}};
  const auto r = run_theorem_suite(SuiteId::T1_3, o);
  ASSERT_EQ(r.rows.size(), 1u);
  EXPECT_FALSE(r.rows[0].probe);
  EXPECT_EQ(r.rows[0].verdict, Verdict::violated);
  EXPECT_FALSE(r.passed());
  EXPECT_EQ(r.rows[0].methods_agree, true);
}

// Counterexamples inside the stated regions, frozen from 40-digit quadrature.
TEST(Counterexamples, LibraryMatchesOracle) {
  struct Case {
    FunctionTag tag;
    double p, q, a, b, r, s, lhs, rhs;
  };
  const Case cases[] = {
      {FunctionTag::arcsin_pq, 2, 2, 0, -2, 0.2, 0.999, 0.46339756209779428364,
       0.28231620576275512166},
      {FunctionTag::arcsin_pq, 3, 1.5, -2, -2, 0.25, 0.75, 0.34488919722240588526,
       0.34447932779941581832},
      {FunctionTag::pi_half_minus_arccos_pq, 2, 2, -0.5, -1, 0.1, 0.999,
       0.23293130614673052417, 0.18799530999728344428},
      {FunctionTag::pi_half_minus_arccos_pq, 2, 4, -0.5, -1, 0.1, 0.95, 0.11553944822785381709,
       0.093943676335196417013},
  };
  for (const auto& c : cases) {
    const TargetFunction f(c.tag, PQParams(c.p, c.q));
    const double lhs = f.value(power_mean(c.a, c.r, c.s));
    const double rhs = power_mean(c.b, f.value(c.r), f.value(c.s));
    EXPECT_NEAR(lhs, c.lhs, 1e-12);
    EXPECT_NEAR(rhs, c.rhs, 1e-12);
    EXPECT_GT(lhs - rhs, 1e-4);
  }
}

TEST(Report, CsvLayout) {
  SuiteOptions o;
  o.pq_set = std::vector<PQPair>{{4, 3}};
  const auto csv = csv_of(run_theorem_suite(SuiteId::L2_8, o));
  std::istringstream in(csv);
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "suite,p,q,a,b,verdict,gap,witness_r,witness_s");
  std::getline(in, line);
  EXPECT_EQ(line.rfind("L2_8:arcsin_pq,4,3,0,,holds,", 0), 0u) << line;
}

TEST(Report, Deterministic) {
  EXPECT_EQ(csv_of(run_theorem_suite(SuiteId::T1_3)), csv_of(run_theorem_suite(SuiteId::T1_3)));
}

TEST(Report, TextSummary) {
  const auto r = run_theorem_suite(SuiteId::corollary_T1_5);
  std::ostringstream out;
  write_report_text(out, std::span<const SuiteReport>(&r, 1));
  EXPECT_NE(out.str().find("# corollary_T1_5: PASS"), std::string::npos);
  EXPECT_NE(out.str().find("verdict=holds"), std::string::npos);
}
