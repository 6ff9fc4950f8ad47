#include "dcinv/combinatorics.hpp"

#include <gtest/gtest.h>

#include "dcinv/errors.hpp"

namespace dcinv {
namespace {

TEST(BinomialTest, SmallValues) {
  EXPECT_EQ(binomial(4, 2), 6);
  EXPECT_EQ(binomial(0, 0), 1);
  EXPECT_EQ(binomial(12, 6), 924);
  EXPECT_EQ(binomial(30, 15), 155117520);
}

TEST(BinomialTest, OutOfRangeLowerIndexIsZero) {
  EXPECT_EQ(binomial(2, -1), 0);
  EXPECT_EQ(binomial(3, 4), 0);
  EXPECT_EQ(binomial(0, 1), 0);
}

TEST(BinomialTest, NegativeTopThrows) { EXPECT_THROW(binomial(-1, 0), DomainError); }

TEST(BinomialTest, PascalRule) {
  for (int n = 1; n <= 20; ++n) {
    for (int k = -1; k <= n + 1; ++k) {
      EXPECT_EQ(binomial(n, k), binomial(n - 1, k - 1) + binomial(n - 1, k)) << n << " " << k;
    }
  }
}

TEST(AlternatingSumTest, Examples) {
  EXPECT_EQ(alternating_binomial_sum(5, 0), 1);
  EXPECT_EQ(alternating_binomial_sum(3, 1), 2);
  EXPECT_EQ(alternating_binomial_sum(4, 2), 3);
}

TEST(AlternatingSumTest, EqualsShiftedBinomial) {
  for (int n = 1; n <= 12; ++n) {
    for (int m = 0; m <= n; ++m) {
      EXPECT_EQ(alternating_binomial_sum(n, m), binomial(n - 1, m)) << n << " " << m;
    }
  }
}

TEST(AlternatingSumTest, RangeChecked) {
  EXPECT_THROW(alternating_binomial_sum(3, -1), DomainError);
  EXPECT_THROW(alternating_binomial_sum(3, 4), DomainError);
}

TEST(RealTraceConstantsTest, Examples) {
  EXPECT_EQ(real_trace_constants(4, 2), (TraceConstants{8, -2}));
  EXPECT_EQ(real_trace_constants(2, 1), (TraceConstants{4, -2}));
  EXPECT_EQ(real_trace_constants(4, 3), (TraceConstants{4, 0}));
}

TEST(RealTraceConstantsTest, DegreeOneConstantIsNMinusFour) {
  for (int n = 2; n <= 12; ++n) EXPECT_EQ(real_trace_constants(n, 1).b, n - 4) << n;
}

TEST(RealTraceConstantsTest, DiagonalEvaluationSumsToDimension) {
  for (int n = 2; n <= 10; ++n) {
    for (int m = 1; m <= n - 1; ++m) {
      const auto c = real_trace_constants(n, m);
      EXPECT_EQ(c.a + c.b, binomial(n, m)) << n << " " << m;
    }
  }
}

TEST(RealTraceConstantsTest, RecursionMatchesClosedForm) {
  for (int n = 2; n <= 12; ++n) {
    for (int m = 1; m <= n - 1; ++m) {
      EXPECT_EQ(real_trace_constants_by_recursion(n, m), real_trace_constants(n, m)) << n << " " << m;
    }
  }
}

TEST(RealTraceConstantsTest, RangeChecked) {
  EXPECT_THROW(real_trace_constants(4, 0), DomainError);
  EXPECT_THROW(real_trace_constants(4, 4), DomainError);
  EXPECT_THROW(real_trace_constants(1, 1), DomainError);
}

TEST(ComplexTraceConstantsTest, Examples) {
  EXPECT_EQ(complex_trace_constants(1, 0, 1), (TraceConstants{1, -3}));
  EXPECT_EQ(complex_trace_constants(2, 0, 2), (TraceConstants{0, 1}));
}

TEST(ComplexTraceConstantsTest, DegreeOneForm) {
  for (int n = 1; n <= 8; ++n) {
    const std::int64_t holo = binomial(n, n - 1);
    EXPECT_EQ(complex_trace_constants(n, n - 1, 1), (TraceConstants{holo, holo * n - 4 * holo}));
  }
}

TEST(ComplexTraceConstantsTest, RecursionMatchesClosedForms) {
  for (int n = 1; n <= 10; ++n) {
    for (int q = 1; q <= std::min(n, 2); ++q) {
      EXPECT_EQ(complex_trace_constants_by_recursion(n, n - q, q), complex_trace_constants(n, n - q, q))
          << n << " " << q;
    }
  }
}

// At xi = eta with one metric the cross ratio is 4, and psi is the trace of
// the identity.
TEST(ComplexTraceConstantsTest, DiagonalEvaluationGivesDimension) {
  for (int n = 1; n <= 10; ++n) {
    for (int q = 1; q <= n; ++q) {
      const auto c = complex_trace_constants(n, n - q, q);
      EXPECT_EQ(4 * c.a + c.b, binomial(n, n - q) * binomial(n, q)) << n << " " << q;
    }
  }
}

TEST(ComplexTraceConstantsTest, RangeChecked) {
  EXPECT_THROW(complex_trace_constants(2, 0, 1), DomainError);
  EXPECT_THROW(complex_trace_constants(2, 2, 0), DomainError);
}

}  // namespace
}  // namespace dcinv
