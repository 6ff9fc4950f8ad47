#include "dcinv/verification_oracle.hpp"

#include <algorithm>
#include <cstdio>

#include <gtest/gtest.h>

#include "dcinv/errors.hpp"

namespace dcinv {
namespace {

void print_failures(const VerificationReport& r) {
  for (const auto& c : r.cases) {
    if (c.verdict == Verdict::kFail) {
      std::printf("FAIL %s: computed %.12g reference %.12g\n", c.id.c_str(), c.computed.real(), c.reference.real());
    }
  }
}

bool has(const std::vector<std::string>& ids, const std::string& id) {
  return std::ranges::find(ids, id) != ids.end();
}

TEST(VerificationOracle, TraceSuitePassesAndFlagsPrintedOneFormConstant) {
  const auto r = verify_trace_formulas(6, 20, 3);
  print_failures(r);
  EXPECT_TRUE(r.passed());
  EXPECT_TRUE(has(r.discrepancies(), "DISCREPANCY-EQ-3.9"));
  EXPECT_GT(r.count(Verdict::kPass), 50u);
}

TEST(VerificationOracle, JetSuitePasses) {
  const auto r = verify_jets(4, 3);
  print_failures(r);
  EXPECT_TRUE(r.passed());
}

TEST(VerificationOracle, QuadratureSuiteFlagsPrintedIntegral) {
  const auto r = verify_quadrature(3);
  print_failures(r);
  EXPECT_TRUE(r.passed());
  EXPECT_TRUE(has(r.discrepancies(), "DISCREPANCY-EQ-4.11"));
}

TEST(VerificationOracle, PipelineSuiteFlagsPrintedTable) {
  const auto r = verify_pipeline(3);
  print_failures(r);
  EXPECT_TRUE(r.passed());
  EXPECT_TRUE(has(r.discrepancies(), "DISCREPANCY-EQ-4.12"));
}

TEST(VerificationOracle, ReportsAreDeterministic) {
  EXPECT_EQ(to_json_text(verify_trace_formulas(4, 5, 11)), to_json_text(verify_trace_formulas(4, 5, 11)));
  EXPECT_EQ(to_json_text(verify_quadrature(11)), to_json_text(verify_quadrature(11)));
}

TEST(VerificationOracle, JsonRoundTrip) {
  const auto r = verify_trace_formulas(3, 2, 5);
  const auto text = to_json_text(r);
  const auto back = report_from_json_text(text);
  EXPECT_EQ(to_json_text(back), text);
  ASSERT_EQ(back.cases.size(), r.cases.size());
  EXPECT_EQ(back.cases.front().id, r.cases.front().id);
}

TEST(VerificationOracle, CoverageCountsEveryCase) {
  const auto r = verify_trace_formulas(3, 2, 5);
  std::size_t total = 0;
  for (const auto& e : r.coverage()) total += e.cases;
  EXPECT_EQ(total, r.cases.size());
}

TEST(VerificationOracle, UnknownSuiteThrows) {
  EXPECT_THROW(run_suite("everything", 1), DomainError);
  EXPECT_THROW(verify_trace_formulas(9, 1, 1), DomainError);
  EXPECT_EQ(suite_names().back(), "all");
}

}  // namespace
}  // namespace dcinv
