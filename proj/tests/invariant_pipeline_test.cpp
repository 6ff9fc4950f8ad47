#include "dcinv/invariant_pipeline.hpp"

#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "dcinv/published_forms.hpp"
#include "dcinv/random_instances.hpp"

namespace dcinv {
namespace {

constexpr double kPi = std::numbers::pi;

DualMetric diagonal(double f, double h) {
  Eigen::MatrixXd g = Eigen::MatrixXd::Zero(2, 2);
  g(0, 0) = f;
  g(1, 1) = h;
  return DualMetric(g);
}

PipelineSettings quick(int level) {
  PipelineSettings s;
  s.sphere_level = level;
  s.certify = false;
  return s;
}

// Mixed partial d_{xi_i} d_{eta_j} psi at xi = eta = x by central differences,
// integrated with a plain trapezoid rule on the unit circle.
double finite_difference_coefficient(const RealSymbolContext& ctx, int i, int j) {
  const double step = 1e-4;
  const int nodes = 256;
  double sum = 0.0;
  for (int k = 0; k < nodes; ++k) {
    const double t = 2.0 * kPi * k / nodes;
    const std::vector<double> x = {std::cos(t), std::sin(t)};
    double acc = 0.0;
    for (int si = -1; si <= 1; si += 2) {
      for (int sj = -1; sj <= 1; sj += 2) {
        std::vector<double> xi = x;
        std::vector<double> eta = x;
        xi[i] += si * step;
        eta[j] += sj * step;
        acc += si * sj * psi_matrix<double>(ctx, xi, eta);
      }
    }
    sum += acc / (4.0 * step * step);
  }
  return sum * 2.0 * kPi / nodes;
}

double contraction(const CoefficientTable& t, const Eigen::VectorXd& w) {
  double out = 0.0;
  for (const auto& e : t.entries) {
    double term = e.value.real();
    for (std::size_t k = 0; k < e.a.size(); ++k) term *= std::pow(w(static_cast<Eigen::Index>(k)), e.a[k]);
    for (std::size_t k = 0; k < e.b.size(); ++k) term *= std::pow(w(static_cast<Eigen::Index>(k)), e.b[k]);
    out += term;
  }
  return out;
}

const MultiIndex e1 = {1, 0};
const MultiIndex e2 = {0, 1};

TEST(DiagonalPlaneTest, MatchesFiniteDifferenceOracle) {
  const DualMetric id = DualMetric::identity(2);
  for (const auto& [f, h] : {std::pair{4.0, 1.0}, std::pair{2.0, 0.5}, std::pair{9.0, 4.0}}) {
    const auto t = omega_real(2, id, diagonal(f, h));
    const RealSymbolContext ctx(2, 1, id, diagonal(f, h));
    EXPECT_NEAR(t.at(e1, e1).real(), finite_difference_coefficient(ctx, 0, 0), 1e-5);
    EXPECT_NEAR(t.at(e2, e2).real(), finite_difference_coefficient(ctx, 1, 1), 1e-5);
    EXPECT_NEAR(t.at(e1, e1).real(), 16.0 * kPi * std::sqrt(f) / (std::sqrt(f) + std::sqrt(h)), 1e-9);
    EXPECT_NEAR(t.at(e2, e2).real(), 16.0 * kPi * std::sqrt(h) / (std::sqrt(f) + std::sqrt(h)), 1e-9);
    EXPECT_LT(std::abs(t.at(e1, e2)), 1e-10);
    EXPECT_LT(std::abs(t.at(e2, e1)), 1e-10);
  }
}

TEST(DiagonalPlaneTest, PrintedClosedFormIsAQuarterOfTheComputedValue) {
  const auto t = omega_real(2, DualMetric::identity(2), diagonal(4.0, 1.0));
  EXPECT_NEAR(t.at(e1, e1).real() / published::diagonal_a11(4.0, 1.0), 4.0, 1e-10);
  EXPECT_NEAR(t.at(e2, e2).real() / published::diagonal_a22(4.0, 1.0), 4.0, 1e-10);
}

TEST(DiagonalPlaneTest, EqualMetricsGiveEightPi) {
  const auto t = omega_real(2, DualMetric::identity(2), DualMetric::identity(2));
  EXPECT_NEAR(t.at(e1, e1).real(), 8.0 * kPi, 1e-10);
  EXPECT_NEAR(t.at(e2, e2).real(), 8.0 * kPi, 1e-10);
  EXPECT_LT(std::abs(t.at(e1, e2)), 1e-12);
}

TEST(DiagonalPlaneTest, RoutesAgree) {
  const DualMetric id = DualMetric::identity(2);
  const DualMetric g2 = diagonal(4.0, 1.0);
  const auto jet = omega_real(2, id, g2);
  EXPECT_LT(max_entry_difference(jet, omega_direct_sum(2, id, g2)), 1e-9);
  EXPECT_LT(max_entry_difference(jet, omega_closed_form(2, id, g2)), 1e-9);
  EXPECT_EQ(omega_direct_sum(2, id, g2).metadata.route, Route::kDirectSum);
}

TEST(PipelineTest, AdditiveConstantChangesNothing) {
  InstanceSampler rng(31);
  const DualMetric g1(rng.spd_in_range(4, 0.5, 2.0));
  const DualMetric g2(rng.spd_in_range(4, 0.5, 2.0));
  const auto plain = omega_closed_form(4, g1, g2, quick(6));
  const auto shifted = omega_closed_form(4, g1, g2, quick(6), 7.5);
  EXPECT_LT(max_entry_difference(plain, shifted), 1e-12 * std::max(1.0, plain.max_abs()));
}

TEST(PipelineTest, FourDimensionalRoutesAgreeOnTheSameRule) {
  InstanceSampler rng(32);
  const DualMetric g1(rng.spd(4));
  const DualMetric g2(rng.spd(4));
  const auto jet = omega_real(4, g1, g2, quick(8));
  const auto direct = omega_direct_sum(4, g1, g2, quick(8));
  const auto closed = omega_closed_form(4, g1, g2, quick(8));
  const double scale = std::max(1.0, jet.max_abs());
  EXPECT_LT(max_entry_difference(jet, direct), 1e-10 * scale);
  EXPECT_LT(max_entry_difference(jet, closed), 1e-10 * scale);
  EXPECT_EQ(jet.entries.size(), 2u * 4u * 20u + 10u * 10u);
}

TEST(PipelineTest, SymmetricOnceConverged) {
  InstanceSampler rng(33);
  const DualMetric g1(rng.spd_in_range(4, 0.5, 2.0));
  const DualMetric g2(rng.spd_in_range(4, 0.5, 2.0));
  const auto t = omega_real(4, g1, g2, quick(32));
  EXPECT_LT(t.symmetry_defect(), 1e-9 * std::max(1.0, t.max_abs()));
}

TEST(PipelineTest, ConstantRescalingOfEitherMetric) {
  InstanceSampler rng(34);
  const Eigen::MatrixXd a = rng.spd(4);
  const Eigen::MatrixXd b = rng.spd(4);
  const auto base = omega_real(4, DualMetric(a), DualMetric(b), quick(8));
  const auto scaled = omega_real(4, DualMetric(3.0 * a), DualMetric(0.25 * b), quick(8));
  EXPECT_LT(max_entry_difference(base, scaled), 1e-9 * std::max(1.0, base.max_abs()));
}

TEST(PipelineTest, RotatingBothMetricsRotatesTheProbe) {
  InstanceSampler rng(35);
  for (int n : {2, 4}) {
    const Eigen::MatrixXd a = rng.spd_in_range(n, 0.5, 2.0);
    const Eigen::MatrixXd b = rng.spd_in_range(n, 0.5, 2.0);
    const Eigen::MatrixXd q = rng.orthogonal(n);
    const auto base = omega_real(n, DualMetric(a), DualMetric(b), quick(32));
    const auto turned = omega_real(n, DualMetric(q.transpose() * a * q), DualMetric(q.transpose() * b * q),
                                   quick(32));
    for (int trial = 0; trial < 3; ++trial) {
      Eigen::VectorXd w(n);
      for (int k = 0; k < n; ++k) w(k) = rng.normal();
      const double want = contraction(base, q * w);
      EXPECT_NEAR(contraction(turned, w), want, 1e-8 * std::max(1.0, std::abs(want))) << n;
    }
  }
}

TEST(PipelineTest, ConventionConversion) {
  const auto d = omega_real(2, DualMetric::identity(2), diagonal(4.0, 1.0));
  const auto partial = d.in_convention(Convention::kPartial);
  EXPECT_EQ(partial.convention, Convention::kPartial);
  EXPECT_NEAR(partial.at(e1, e1).real(), -d.at(e1, e1).real(), 1e-14);
  EXPECT_NEAR(partial.at(e1, e1).imag(), 0.0, 1e-14);
  EXPECT_LT(max_entry_difference(partial.in_convention(Convention::kD), d), 1e-14);
}

TEST(PipelineTest, ThreadCountDoesNotChangeBits) {
  InstanceSampler rng(36);
  const DualMetric g1(rng.spd(4));
  const DualMetric g2(rng.spd(4));
  PipelineSettings one = quick(6);
  one.threads = 1;
  PipelineSettings three = quick(6);
  three.threads = 3;
  const auto x = omega_real(4, g1, g2, one);
  const auto y = omega_real(4, g1, g2, three);
  for (std::size_t k = 0; k < x.entries.size(); ++k) EXPECT_EQ(x.entries[k].value, y.entries[k].value);
}

TEST(PipelineTest, CertificationRecordsTheRerun) {
  const auto t = omega_real(2, DualMetric::identity(2), diagonal(4.0, 1.0));
  EXPECT_TRUE(t.metadata.certified);
  EXPECT_TRUE(t.metadata.converged);
  EXPECT_EQ(t.metadata.check_nodes, 2 * t.metadata.nodes);
  EXPECT_EQ(t.metadata.check_entries.size(), t.entries.size());
  EXPECT_LT(t.metadata.convergence_delta, 1e-12);
  EXPECT_TRUE(t.metadata.warnings.empty());
  EXPECT_EQ(t.metadata.g1_fingerprint, metric_fingerprint(Eigen::MatrixXd::Identity(2, 2)));
  EXPECT_NE(t.metadata.g1_fingerprint, t.metadata.g2_fingerprint);
}

TEST(PipelineTest, CoarseRuleIsFlagged) {
  InstanceSampler rng(37);
  PipelineSettings s;
  s.sphere_level = 3;
  const auto t = omega_real(4, DualMetric(rng.spd(4)), DualMetric(rng.spd(4)), s);
  EXPECT_FALSE(t.metadata.converged);
  ASSERT_EQ(t.metadata.warnings.size(), 1u);
}

TEST(PipelineTest, MetricSphereFlagIsNeutralForTheIdentity) {
  PipelineSettings s;
  s.metric_unit_sphere = true;
  const auto x = omega_real(2, DualMetric::identity(2), diagonal(4.0, 1.0), s);
  const auto y = omega_real(2, DualMetric::identity(2), diagonal(4.0, 1.0));
  EXPECT_LT(max_entry_difference(x, y), 1e-12);
  EXPECT_TRUE(x.metadata.metric_unit_sphere);
  EXPECT_FALSE(x.metadata.preconditioned);
}

TEST(PipelineTest, Errors) {
  EXPECT_THROW(omega_real(3, DualMetric::identity(3), DualMetric::identity(3)), DomainError);
  EXPECT_THROW(omega_real(2, DualMetric::identity(2), DualMetric::identity(4)), ShapeError);
  const auto j1 = JInvariantMetric::identity(1);
  EXPECT_THROW(omega_complex(1, 1, 0, j1, j1), DomainError);
  EXPECT_THROW(omega_complex(1, 1, 1, j1, j1), DomainError);
  PipelineSettings bad;
  bad.convergence_factor = 0;
  EXPECT_THROW(omega_real(2, DualMetric::identity(2), DualMetric::identity(2), bad), DomainError);
  EXPECT_THROW(offdiagonal_report(1.0, 2.0), DomainError);
}

TEST(ComplexPipelineTest, LineCaseVanishes) {
  InstanceSampler rng(38);
  for (int trial = 0; trial < 5; ++trial) {
    const JInvariantMetric g1(rng.j_invariant(1));
    const JInvariantMetric g2(rng.j_invariant(1));
    const auto t = omega_complex(1, 0, 1, g1, g2);
    EXPECT_LT(t.max_abs(), 1e-10);
    EXPECT_EQ(t.entries.size(), 4u);
    const ComplexSymbolContext ctx(1, 0, 1, g1, g2);
    const QuadratureRule rule = circle_rule(64);
    for (std::size_t k = 0; k < rule.size(); ++k) {
      const auto jet = mixed_taylor_jet(ctx, rule.node(k));
      for (const auto& c : jet.coefficients()) EXPECT_LT(std::abs(c), 1e-10);
    }
  }
}

TEST(ComplexPipelineTest, RoutesAgreeInComplexDimensionTwo) {
  InstanceSampler rng(39);
  const JInvariantMetric g1(rng.j_invariant(2));
  const JInvariantMetric g2(rng.j_invariant(2));
  const auto jet = omega_complex(2, 1, 1, g1, g2, quick(4));
  const auto direct = omega_direct_sum(2, 1, 1, g1, g2, quick(4));
  const auto closed = omega_closed_form(2, 1, 1, g1, g2, quick(4));
  const double scale = std::max(1.0, jet.max_abs());
  EXPECT_LT(max_entry_difference(jet, direct), 1e-10 * scale);
  EXPECT_LT(max_entry_difference(jet, closed), 1e-10 * scale);
  EXPECT_EQ(jet.mode, FormMode::kComplex);
  EXPECT_EQ(jet.order(), 4);
}

TEST(MixedJetTest, RealSlotsAreMixedPartials) {
  const RealSymbolContext ctx(2, 1, DualMetric::identity(2), diagonal(4.0, 1.0));
  const std::vector<double> xi = {0.6, 0.8};
  const auto jet = mixed_taylor_jet(ctx, xi);
  const MultiIndex u1v1 = {1, 0, 1, 0};
  const MultiIndex u1u2 = {1, 1, 0, 0};
  const double step = 1e-4;
  double want = 0.0;
  for (int si = -1; si <= 1; si += 2) {
    for (int sj = -1; sj <= 1; sj += 2) {
      std::vector<double> x = xi;
      std::vector<double> y = xi;
      x[0] += si * step;
      y[0] += sj * step;
      want += si * sj * psi_matrix<double>(ctx, x, y);
    }
  }
  want /= 4.0 * step * step;
  EXPECT_NEAR(jet.coefficient(u1v1), want, 1e-6);
  EXPECT_EQ(jet.coefficient(u1u2), 0.0);
}

TEST(OffDiagonalTest, ReportIsSymmetricAndContinuous) {
  const auto r = offdiagonal_report(2.0, 1.0);
  EXPECT_NEAR(r.table.at(e1, e2).real(), r.table.at(e2, e1).real(), 1e-10);
  EXPECT_NEAR(r.table.at(e1, e1).real(), r.table.at(e2, e2).real(), 1e-10);
  EXPECT_NEAR(r.continuity_numeric, r.continuity_diagonal_numeric, 1e-6);
  EXPECT_NEAR(r.continuity_diagonal_numeric, 8.0 * kPi, 1e-10);
  EXPECT_NEAR(r.continuity_printed, 2.0 * kPi, 1e-12);
}

}  // namespace
}  // namespace dcinv
