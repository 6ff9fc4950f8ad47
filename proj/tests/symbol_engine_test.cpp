#include "dcinv/symbol_engine.hpp"

#include <cmath>

#include <gtest/gtest.h>

#include "dcinv/random_instances.hpp"

namespace dcinv {
namespace {

template <class R>
double max_abs_diff(const OperatorMatrix<R>& a, const OperatorMatrix<R>& b) {
  double out = 0.0;
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) out = std::max(out, std::abs(a(r, c) - b(r, c)));
  }
  return out;
}

template <class R>
double distance_to_identity(const OperatorMatrix<R>& a) {
  double out = 0.0;
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) {
      out = std::max(out, std::abs(a(r, c) - (r == c ? R(1.0) : R(0.0))));
    }
  }
  return out;
}

TEST(RealSymbolTest, UnitCovectorInThePlane) {
  const RealFormSymbol s(2, 1, DualMetric::identity(2));
  const std::vector<double> xi = {1.0, 0.0};
  const auto m = s(std::span<const double>(xi));
  EXPECT_DOUBLE_EQ(m(0, 0), 1.0);
  EXPECT_DOUBLE_EQ(m(1, 1), -1.0);
  EXPECT_DOUBLE_EQ(m(0, 1), 0.0);
  EXPECT_DOUBLE_EQ(m(1, 0), 0.0);
}

TEST(RealSymbolTest, DomainErrors) {
  EXPECT_THROW(RealFormSymbol(3, 0, DualMetric::identity(3)), DomainError);
  EXPECT_THROW(RealFormSymbol(3, 3, DualMetric::identity(3)), DomainError);
  EXPECT_THROW(RealFormSymbol(3, 1, DualMetric::identity(2)), ShapeError);
  const RealFormSymbol s(3, 1, DualMetric::identity(3));
  const std::vector<double> zero = {0.0, 0.0, 0.0};
  EXPECT_THROW(s(std::span<const double>(zero)), SingularPointError);
}

TEST(RealSymbolTest, MatchesReferenceAndIsInvolution) {
  InstanceSampler rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 2 + trial % 5;
    const int m = 1 + (trial / 5) % (n - 1);
    const DualMetric g(rng.spd(n));
    const RealFormSymbol s(n, m, g);
    const auto xi = rng.covector(n);
    const auto fast = s(std::span<const double>(xi));
    const auto ref = sigma_F_real<double>(n, m, g, xi);
    EXPECT_LT(max_abs_diff(fast, ref), 1e-11) << n << " " << m;
    EXPECT_LT(distance_to_identity(fast * fast), 1e-10) << n << " " << m;
  }
}

TEST(RealSymbolTest, HomogeneousOfDegreeZeroAndScaleInvariant) {
  InstanceSampler rng(12);
  const int n = 4;
  const DualMetric g(rng.spd(n));
  const auto xi = rng.covector(n);
  std::vector<double> scaled_xi = xi;
  for (auto& v : scaled_xi) v *= -3.7;
  const RealFormSymbol s(n, 2, g);
  const RealFormSymbol t(n, 2, g.scaled(5.0));
  const auto base = s(std::span<const double>(xi));
  EXPECT_LT(max_abs_diff(base, s(std::span<const double>(scaled_xi))), 1e-12);
  EXPECT_LT(max_abs_diff(base, t(std::span<const double>(xi))), 1e-12);
}

TEST(ComplexSymbolTest, MatchesReferenceAndIsInvolution) {
  InstanceSampler rng(13);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 1 + trial % 3;
    const int q = 1 + (trial / 3) % n;
    const int p = (trial / 7) % (n + 1);
    const JInvariantMetric g(rng.j_invariant(n));
    const ComplexFormSymbol s(n, p, q, g);
    const auto xi = rng.covector(2 * n);
    const auto fast = s(std::span<const double>(xi));
    const auto ref = sigma_F_complex<double>(n, p, q, g, xi);
    EXPECT_LT(max_abs_diff(fast, ref), 1e-11) << n << " " << p << " " << q;
    if (q < n) EXPECT_LT(distance_to_identity(fast * fast), 1e-10) << n << " " << p << " " << q;
  }
}

TEST(ComplexSymbolTest, TopDegreeIsHalfIdentity) {
  // Only the eps-iota term survives when q = n, and it equals |xi-hat|^2 = 2|xi|^2.
  InstanceSampler rng(14);
  const JInvariantMetric g(rng.j_invariant(2));
  const ComplexFormSymbol s(2, 0, 2, g);
  const auto xi = rng.covector(4);
  EXPECT_LT(distance_to_identity(s(std::span<const double>(xi))), 1e-12);
}

TEST(PsiTest, RealExamples) {
  const RealSymbolContext ctx(2, 1, DualMetric::identity(2), DualMetric::identity(2));
  const std::vector<double> e1 = {1.0, 0.0};
  const std::vector<double> e2 = {0.0, 1.0};
  EXPECT_NEAR(psi_matrix<double>(ctx, e1, e1), 2.0, 1e-15);
  EXPECT_NEAR(psi_matrix<double>(ctx, e1, e2), -2.0, 1e-15);
  EXPECT_NEAR(psi_closed<double>(ctx, e1, e1), 2.0, 1e-15);
  EXPECT_NEAR(psi_closed<double>(ctx, e1, e2), -2.0, 1e-15);
  EXPECT_NEAR(psi_closed<double>(ctx, e1, e2, 0.5), -1.5, 1e-15);
  const std::vector<double> zero = {0.0, 0.0};
  EXPECT_THROW(psi_closed<double>(ctx, zero, e1), DomainError);
}

TEST(PsiTest, ComplexExample) {
  const ComplexSymbolContext ctx(1, 0, 1, JInvariantMetric::identity(1), JInvariantMetric::identity(1));
  const std::vector<double> e1 = {1.0, 0.0};
  EXPECT_NEAR(std::abs(psi_matrix<double>(ctx, e1, e1) - Complex(1.0)), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(psi_closed<double>(ctx, e1, e1) - Complex(1.0)), 0.0, 1e-15);
}

TEST(PsiTest, TraceAtCoincidentPointIsDimension) {
  InstanceSampler rng(15);
  for (int n = 2; n <= 6; ++n) {
    for (int m = 1; m < n; ++m) {
      const DualMetric g(rng.spd(n));
      const RealSymbolContext ctx(n, m, g, g);
      const auto xi = rng.covector(n);
      EXPECT_NEAR(psi_matrix<double>(ctx, xi, xi), static_cast<double>(binomial(n, m)), 1e-9);
    }
  }
}

TEST(PsiTest, ClosedFormMatchesMatrixTraceReal) {
  InstanceSampler rng(16);
  for (int trial = 0; trial < 500; ++trial) {
    const int n = 2 + trial % 5;
    const int m = 1 + (trial / 5) % (n - 1);
    const RealSymbolContext ctx(n, m, DualMetric(rng.spd(n)), DualMetric(rng.spd(n)));
    const auto xi = rng.covector(n);
    const auto eta = rng.covector(n);
    const double lhs = psi_matrix<double>(ctx, xi, eta);
    const double rhs = psi_closed<double>(ctx, xi, eta);
    EXPECT_NEAR(lhs, rhs, 1e-10 * std::max(1.0, std::abs(rhs))) << n << " " << m;
  }
}

TEST(PsiTest, ClosedFormMatchesMatrixTraceComplex) {
  InstanceSampler rng(17);
  for (int trial = 0; trial < 120; ++trial) {
    const int n = 1 + trial % 3;
    const int q = 1 + (trial / 3) % n;
    const int p = n - q;
    const ComplexSymbolContext ctx(n, p, q, JInvariantMetric(rng.j_invariant(n)),
                                   JInvariantMetric(rng.j_invariant(n)));
    const auto xi = rng.covector(2 * n);
    const auto eta = rng.covector(2 * n);
    const Complex lhs = psi_matrix<double>(ctx, xi, eta);
    const Complex rhs = psi_closed<double>(ctx, xi, eta);
    EXPECT_LT(std::abs(lhs - rhs), 1e-10 * std::max(1.0, std::abs(rhs))) << n << " " << p << " " << q;
  }
}

TEST(PsiTest, TracePairingMatchesMatrixTrace) {
  InstanceSampler rng(19);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 2 + trial % 4;
    const int m = 1 + (trial / 4) % (n - 1);
    const RealSymbolContext ctx(n, m, DualMetric(rng.spd(n)), DualMetric(rng.spd(n)));
    const auto xi = rng.covector(n);
    const auto eta = rng.covector(n);
    const double want = psi_matrix<double>(ctx, xi, eta);
    EXPECT_NEAR(ctx.pairing()(xi, eta), want, 1e-10 * std::max(1.0, std::abs(want)));
  }
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 1 + trial % 2;
    const int q = 1 + (trial / 2) % n;
    const ComplexSymbolContext ctx(n, n - q, q, JInvariantMetric(rng.j_invariant(n)),
                                   JInvariantMetric(rng.j_invariant(n)));
    const auto xi = rng.covector(2 * n);
    const auto eta = rng.covector(2 * n);
    const Complex want = psi_matrix<double>(ctx, xi, eta);
    EXPECT_LT(std::abs(ctx.pairing()(xi, eta) - want), 1e-10 * std::max(1.0, std::abs(want)));
  }
}

TEST(PsiTest, SwappingMetricsSwapsArguments) {
  InstanceSampler rng(18);
  const int n = 4;
  const DualMetric g1(rng.spd(n));
  const DualMetric g2(rng.spd(n));
  const RealSymbolContext forward(n, 2, g1, g2);
  const RealSymbolContext backward(n, 2, g2, g1);
  const auto xi = rng.covector(n);
  const auto eta = rng.covector(n);
  EXPECT_NEAR(psi_matrix<double>(forward, xi, eta), psi_matrix<double>(backward, eta, xi), 1e-11);
}

}  // namespace
}  // namespace dcinv
