#include "dcinv/reproduction.hpp"

#include <gtest/gtest.h>

#include "dcinv/errors.hpp"

namespace dcinv {
namespace {

double summary(const ReproductionTable& t, const std::string& key) {
  for (const auto& [k, v] : t.summary) {
    if (k == key) return v;
  }
  ADD_FAILURE() << "missing summary key " << key;
  return 0.0;
}

TEST(Reproduction, DiagonalTableIsFourTimesPrinted) {
  const auto t = reproduction_table("4-diagonal", 2, 7);
  EXPECT_EQ(t.columns.size(), t.rows.front().size());
  EXPECT_NEAR(summary(t, "max_computed_over_printed"), 4.0, 1e-12);
  for (const auto& row : t.rows) EXPECT_LT(row.back(), 1e-10);
  EXPECT_TRUE(t.all_converged);
}

TEST(Reproduction, OffDiagonalContinuityHoldsNumerically) {
  const auto t = reproduction_table("4-offdiagonal", 2, 7);
  EXPECT_LT(summary(t, "continuity_vs_diagonal_numeric"), 1e-6);
  for (const auto& row : t.rows) EXPECT_NEAR(row[5], row[7], 1e-10);
}

TEST(Reproduction, LineCaseVanishes) {
  const auto t = reproduction_table("7", 2, 7);
  EXPECT_EQ(t.rows.size(), 20u);
  EXPECT_LT(summary(t, "max_abs"), 1e-10);
}

TEST(Reproduction, CsvAndJsonShapes) {
  const auto t = reproduction_table("4-diagonal", 2, 7);
  const auto csv = to_csv_text(t);
  EXPECT_NE(csv.find("f,h,printed_a11,computed_a11"), std::string::npos);
  EXPECT_NE(to_json_text(t).find("\"section\": \"4-diagonal\""), std::string::npos);
}

TEST(Reproduction, UnknownSectionThrows) {
  EXPECT_THROW(reproduction_table("4", 2, 7), DomainError);
  EXPECT_THROW(reproduction_table("conjecture", 3, 7), DomainError);
  EXPECT_EQ(reproduction_sections().size(), 4u);
}

}  // namespace
}  // namespace dcinv
