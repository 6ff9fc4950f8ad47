#include "dcinv/complex_forms.hpp"

#include <cmath>

#include <gtest/gtest.h>

#include "dcinv/random_instances.hpp"

namespace dcinv {
namespace {

const Complex kI{0.0, 1.0};

Eigen::MatrixXcd dense(const OperatorMatrix<Complex>& m) {
  Eigen::MatrixXcd out(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = m(r, c);
  }
  return out;
}

HatCovector<Complex> random_hat(InstanceSampler& rng, int n) {
  const auto xi = rng.covector(2 * n);
  return hat<double>(xi);
}

TEST(HatTest, Examples) {
  const std::vector<double> e1 = {1.0, 0.0};
  const std::vector<double> e2 = {0.0, 1.0};
  EXPECT_EQ(hat<double>(e1).components[0], Complex(1.0, 0.0));
  EXPECT_EQ(hat<double>(e2).components[0], kI);
  const std::vector<double> odd = {1.0, 2.0, 3.0};
  EXPECT_THROW(hat<double>(odd), DomainError);
}

TEST(HatTest, RealLinear) {
  InstanceSampler rng(1);
  const auto xi = rng.covector(6);
  const auto eta = rng.covector(6);
  std::vector<double> mix(6);
  for (int i = 0; i < 6; ++i) mix[i] = 2.5 * xi[i] - 0.75 * eta[i];
  const auto hx = hat<double>(xi);
  const auto he = hat<double>(eta);
  const auto hm = hat<double>(mix);
  for (int j = 0; j < 3; ++j) {
    EXPECT_NEAR(std::abs(hm.components[j] - (2.5 * hx.components[j] - 0.75 * he.components[j])), 0.0, 1e-14);
  }
}

TEST(JInvariantMetricTest, Validation) {
  Eigen::MatrixXd g = Eigen::MatrixXd::Identity(2, 2);
  g(0, 0) = 2.0;
  try {
    JInvariantMetric m(g);
    FAIL();
  } catch (const MetricError& e) {
    EXPECT_EQ(e.violation(), MetricViolation::kNotJInvariant);
  }
  EXPECT_THROW(JInvariantMetric(Eigen::MatrixXd::Identity(3, 3)), MetricError);
  InstanceSampler rng(2);
  EXPECT_NO_THROW(JInvariantMetric(rng.j_invariant(3)));
}

TEST(HermitianInnerTest, Examples) {
  const auto g = JInvariantMetric::identity(1);
  const HatCovector<Complex> x{{Complex(1.0, 0.0)}};
  const HatCovector<Complex> y{{kI}};
  EXPECT_NEAR(std::abs(hermitian_inner(g, x, x) - 2.0), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(hermitian_inner(g, x, y) - Complex(0.0, -2.0)), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(hermitian_inner(g, y, x) - Complex(0.0, 2.0)), 0.0, 1e-15);
}

TEST(HermitianInnerTest, NormIsTwiceRealNorm) {
  InstanceSampler rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 1 + trial % 3;
    const JInvariantMetric g(rng.j_invariant(n));
    const auto xi = rng.covector(2 * n);
    const Complex h = hermitian_inner(g, hat<double>(xi), hat<double>(xi));
    const double r = g.real().inner<double>(xi, xi);
    EXPECT_NEAR(h.real(), 2.0 * r, 1e-12 * r);
    EXPECT_NEAR(h.imag(), 0.0, 1e-12 * r);
  }
}

TEST(HermitianInnerTest, ScalesWithMetric) {
  InstanceSampler rng(4);
  const JInvariantMetric g(rng.j_invariant(2));
  const auto x = random_hat(rng, 2);
  const auto y = random_hat(rng, 2);
  EXPECT_NEAR(std::abs(hermitian_inner(g.scaled(3.0), x, y) - 3.0 * hermitian_inner(g, x, y)), 0.0, 1e-12);
}

TEST(BiFormBasisTest, Dimensions) {
  for (int n = 1; n <= 4; ++n) {
    for (int p = 0; p <= n; ++p) {
      for (int q = 0; q <= n; ++q) {
        const auto b = biform_basis(n, p, q);
        EXPECT_EQ(b.size(), static_cast<std::size_t>(binomial(n, p) * binomial(n, q)));
        for (std::size_t k = 0; k < b.size(); ++k) EXPECT_EQ(biform_rank(n, b[k]), k);
      }
    }
  }
}

TEST(AntiholoWedgeTest, UnitCovectorCarriesRootTwo) {
  const std::vector<double> xi = {1.0, 0.0};
  const auto e = eps_antiholo(1, 0, 0, hat<double>(xi));
  ASSERT_EQ(e.rows(), 1u);
  ASSERT_EQ(e.cols(), 1u);
  EXPECT_NEAR(std::abs(e(0, 0) - std::sqrt(2.0)), 0.0, 1e-15);
  EXPECT_THROW(eps_antiholo(1, 0, 1, hat<double>(xi)), DomainError);
}

TEST(AntiholoWedgeTest, SquaresToZero) {
  InstanceSampler rng(5);
  for (int n = 2; n <= 3; ++n) {
    for (int p = 0; p <= n; ++p) {
      for (int q = 0; q + 2 <= n; ++q) {
        const auto x = random_hat(rng, n);
        const Eigen::MatrixXcd sq = dense(eps_antiholo(n, p, q + 1, x)) * dense(eps_antiholo(n, p, q, x));
        EXPECT_LT(sq.cwiseAbs().maxCoeff(), 1e-14);
      }
    }
  }
}

TEST(AntiholoWedgeTest, HolomorphicBlocksAreUntouched) {
  InstanceSampler rng(6);
  const int n = 2;
  const auto x = random_hat(rng, n);
  const auto src = biform_basis(n, 1, 0);
  const auto dst = biform_basis(n, 1, 1);
  const auto e = eps_antiholo(n, 1, 0, x);
  for (std::size_t r = 0; r < dst.size(); ++r) {
    for (std::size_t c = 0; c < src.size(); ++c) {
      if (dst[r].holo != src[c].holo) EXPECT_EQ(e(r, c), Complex{});
    }
  }
}

TEST(AntiholoInteriorTest, EuclideanIsConjugateTranspose) {
  InstanceSampler rng(7);
  for (int n = 1; n <= 3; ++n) {
    const auto g = JInvariantMetric::identity(n);
    for (int p = 0; p <= n; ++p) {
      for (int q = 1; q <= n; ++q) {
        const auto x = random_hat(rng, n);
        const Eigen::MatrixXcd diff =
            dense(iota_antiholo(n, p, q, g, x)) - dense(eps_antiholo(n, p, q - 1, x)).adjoint();
        EXPECT_LT(diff.cwiseAbs().maxCoeff(), 1e-13);
      }
    }
  }
  const std::vector<double> xi = {1.0, 0.0};
  EXPECT_THROW(iota_antiholo(1, 0, 0, JInvariantMetric::identity(1), hat<double>(xi)), DomainError);
}

TEST(AntiholoCliffordTest, AnticommutatorIsInnerProduct) {
  InstanceSampler rng(8);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + trial % 3;
    const int p = trial % (n + 1);
    const int q = (trial / 3) % (n + 1);
    const JInvariantMetric g(rng.j_invariant(n));
    const auto x = random_hat(rng, n);
    const auto y = random_hat(rng, n);
    const auto dim = static_cast<Eigen::Index>(biform_dimension(n, p, q));
    Eigen::MatrixXcd anti = Eigen::MatrixXcd::Zero(dim, dim);
    if (q >= 1) anti += dense(eps_antiholo(n, p, q - 1, x)) * dense(iota_antiholo(n, p, q, g, y));
    if (q + 1 <= n) anti += dense(iota_antiholo(n, p, q + 1, g, y)) * dense(eps_antiholo(n, p, q, x));
    const Complex ip = hermitian_inner(g, x, y);
    const Eigen::MatrixXcd expected = ip * Eigen::MatrixXcd::Identity(dim, dim);
    EXPECT_LT((anti - expected).cwiseAbs().maxCoeff(), 1e-12 * std::max(1.0, std::abs(ip)))
        << n << " " << p << " " << q;
  }
}

TEST(AntiholoCliffordTest, TraceIdentity) {
  InstanceSampler rng(9);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + trial % 3;
    const int p = trial % (n + 1);
    const int q = (trial / 3) % n;
    const JInvariantMetric g(rng.j_invariant(n));
    const auto x = random_hat(rng, n);
    const auto y = random_hat(rng, n);
    const Complex tr = trace(iota_antiholo(n, p, q + 1, g, y) * eps_antiholo(n, p, q, x));
    const Complex expected = hermitian_inner(g, x, y) *
                             static_cast<double>(binomial(n, p) * alternating_binomial_sum(n, q));
    EXPECT_LT(std::abs(tr - expected), 1e-12 * std::max(1.0, std::abs(expected))) << n << " " << p << " " << q;
  }
}

}  // namespace
}  // namespace dcinv
