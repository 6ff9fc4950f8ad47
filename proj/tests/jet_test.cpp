#include "dcinv/jet.hpp"

#include <random>

#include <gtest/gtest.h>

#include "dcinv/ring.hpp"

namespace dcinv {
namespace {

using J = Jet<double>;

J var(const std::shared_ptr<const MonomialTable>& t, int i, double at = 0.0) {
  return J::variable(t, i, at);
}

TEST(MonomialTableTest, GradedOrder) {
  const auto t = MonomialTable::get(2, 2);
  ASSERT_EQ(t->size(), 6u);
  const std::vector<MultiIndex> expected = {{0, 0}, {1, 0}, {0, 1}, {2, 0}, {1, 1}, {0, 2}};
  for (std::size_t k = 0; k < expected.size(); ++k) {
    EXPECT_EQ(MultiIndex(t->exponent(k).begin(), t->exponent(k).end()), expected[k]);
    EXPECT_EQ(t->find(expected[k]), static_cast<std::ptrdiff_t>(k));
  }
  EXPECT_EQ(t->degree_begin(2), 3u);
  EXPECT_EQ(t->degree_begin(3), 6u);
}

TEST(MonomialTableTest, DeskScaleSize) {
  EXPECT_EQ(MonomialTable::get(12, 6)->size(), 18564u);
  EXPECT_EQ(MonomialTable::get(8, 4)->size(), 495u);
}

TEST(MonomialTableTest, Cached) { EXPECT_EQ(MonomialTable::get(3, 2), MonomialTable::get(3, 2)); }

TEST(MonomialTableTest, RejectsBadShape) {
  EXPECT_THROW(MonomialTable::get(0, 2), DomainError);
  EXPECT_THROW(MonomialTable::get(17, 2), DomainError);
  EXPECT_THROW(MonomialTable::get(2, 16), DomainError);
}

TEST(JetTest, InverseOfOnePlusU) {
  const auto t = MonomialTable::get(1, 2);
  const J inv = inverse(var(t, 0, 1.0));
  EXPECT_EQ(inv.coefficient(MultiIndex{0}), 1.0);
  EXPECT_EQ(inv.coefficient(MultiIndex{1}), -1.0);
  EXPECT_EQ(inv.coefficient(MultiIndex{2}), 1.0);
}

TEST(JetTest, SquareOfSum) {
  const auto t = MonomialTable::get(2, 2);
  const J s = var(t, 0) + var(t, 1);
  const J sq = s * s;
  EXPECT_EQ(sq.coefficient(MultiIndex{2, 0}), 1.0);
  EXPECT_EQ(sq.coefficient(MultiIndex{1, 1}), 2.0);
  EXPECT_EQ(sq.coefficient(MultiIndex{0, 2}), 1.0);
  EXPECT_EQ(sq.coefficient(MultiIndex{1, 0}), 0.0);
  EXPECT_EQ(sq.coefficient(MultiIndex{0, 0}), 0.0);
}

TEST(JetTest, ProductTruncatesAtCap) {
  const auto t = MonomialTable::get(1, 2);
  const J u = var(t, 0);
  const J cube = u * u * u;
  for (double c : cube.coefficients()) EXPECT_EQ(c, 0.0);
  EXPECT_EQ(cube.coefficient(MultiIndex{3}), 0.0);
}

TEST(JetTest, ZeroConstantInverseThrows) {
  const auto t = MonomialTable::get(2, 3);
  EXPECT_THROW(inverse(var(t, 0)), SingularPointError);
}

TEST(JetTest, DerivativeMultipliesFactorial) {
  const auto t = MonomialTable::get(2, 4);
  J j(t);
  j.set_coefficient(MultiIndex{2, 1}, 0.5);
  EXPECT_EQ(j.derivative(MultiIndex{2, 1}), 1.0);
  EXPECT_THROW(j.set_coefficient(MultiIndex{3, 2}, 1.0), DomainError);
  EXPECT_THROW(j.coefficient(MultiIndex{1}), ShapeError);
}

TEST(JetTest, MixedShapesRejected) {
  EXPECT_THROW(var(MonomialTable::get(2, 2), 0) + var(MonomialTable::get(2, 3), 0), ShapeError);
}

// Dyadic rationals keep every product exact, so ring laws hold bit for bit.
J random_dyadic(const std::shared_ptr<const MonomialTable>& t, std::mt19937& rng) {
  std::uniform_int_distribution<int> d(-8, 8);
  J j(t);
  for (auto& c : j.coefficients()) c = d(rng) / 4.0;
  return j;
}

TEST(JetTest, RingLawsExact) {
  std::mt19937 rng(11);
  for (int nvars = 1; nvars <= 3; ++nvars) {
    for (int cap = 0; cap <= 4; ++cap) {
      const auto t = MonomialTable::get(nvars, cap);
      for (int trial = 0; trial < 5; ++trial) {
        const J a = random_dyadic(t, rng);
        const J b = random_dyadic(t, rng);
        const J c = random_dyadic(t, rng);
        EXPECT_EQ(a * b, b * a);
        EXPECT_EQ((a * b) * c, a * (b * c));
        EXPECT_EQ(a * (b + c), a * b + a * c);
      }
    }
  }
}

TEST(JetTest, InverseTimesSelfIsOne) {
  std::mt19937 rng(5);
  for (int nvars = 1; nvars <= 3; ++nvars) {
    for (int cap = 0; cap <= 4; ++cap) {
      const auto t = MonomialTable::get(nvars, cap);
      J a = random_dyadic(t, rng);
      a[0] = 1.0;  // unit constant term keeps the geometric series dyadic
      const J prod = inverse(a) * a;
      EXPECT_EQ(prod, J::constant(t, 1.0));
    }
  }
}

TEST(JetTest, InverseMatchesTaylorSeries) {
  // 1 / (2 + u + v^2) expanded at 0 to degree 3.
  const auto t = MonomialTable::get(2, 3);
  const J x = J::constant(t, 2.0) + var(t, 0) + var(t, 1) * var(t, 1);
  const J inv = inverse(x);
  EXPECT_DOUBLE_EQ(inv.coefficient(MultiIndex{0, 0}), 0.5);
  EXPECT_DOUBLE_EQ(inv.coefficient(MultiIndex{1, 0}), -0.25);
  EXPECT_DOUBLE_EQ(inv.coefficient(MultiIndex{0, 2}), -0.25);
  EXPECT_DOUBLE_EQ(inv.coefficient(MultiIndex{2, 0}), 0.125);
  EXPECT_DOUBLE_EQ(inv.coefficient(MultiIndex{1, 2}), 0.25);
  EXPECT_DOUBLE_EQ(inv.coefficient(MultiIndex{3, 0}), -0.0625);
}

TEST(JetTest, ComplexConjugateIsCoefficientwise) {
  const auto t = MonomialTable::get(1, 1);
  Jet<Complex> j(t);
  j[0] = Complex(1, 2);
  j[1] = Complex(0, -3);
  const auto c = conjugate(j);
  EXPECT_EQ(c[0], Complex(1, -2));
  EXPECT_EQ(c[1], Complex(0, 3));
}

TEST(TPrimeTest, DropsPurePowersAndOtherDegrees) {
  const auto t = MonomialTable::get(2, 2);  // u1, v1
  const J u = var(t, 0);
  const J v = var(t, 1);
  const J psi = J::constant(t, 1.0) + u + v + u * v + u * u + v * v;
  const J tp = t_prime(psi, 2);
  EXPECT_EQ(tp.coefficient(MultiIndex{1, 1}), 1.0);
  double total = 0.0;
  for (double c : tp.coefficients()) total += std::abs(c);
  EXPECT_EQ(total, 1.0);
}

TEST(TPrimeTest, ConstantInEtaGivesZero) {
  const auto t = MonomialTable::get(4, 2);
  const J u1 = var(t, 0, 0.3);
  const J psi = inverse(J::constant(t, 1.0) + u1 * u1) + var(t, 1) * u1;
  const J tp = t_prime(psi, 2);
  for (double c : tp.coefficients()) EXPECT_EQ(c, 0.0);
}

TEST(TPrimeTest, CapBelowOrderThrows) {
  const auto t = MonomialTable::get(2, 1);
  EXPECT_THROW(t_prime(J(t), 2), DomainError);
  EXPECT_THROW(t_prime(J(MonomialTable::get(3, 2)), 2), ShapeError);
}

TEST(SubstituteShiftTest, BilinearMonomialUnchanged) {
  const auto t = MonomialTable::get(2, 2);
  const J p = var(t, 0) * var(t, 1);
  EXPECT_EQ(substitute_shift(p), p);
}

TEST(SubstituteShiftTest, ExpandsFirstBlock) {
  // P = u1^2 v2 in variables (u1, u2, v1, v2).
  const auto t = MonomialTable::get(4, 3);
  const J p = var(t, 0) * var(t, 0) * var(t, 3);
  const J s = substitute_shift(p);
  J expected = p;
  expected.set_coefficient(MultiIndex{1, 0, 1, 1}, 2.0);
  EXPECT_EQ(s, expected);
}

TEST(SubstituteShiftTest, NoPureVMonomials) {
  std::mt19937 rng(3);
  const auto t = MonomialTable::get(4, 4);
  const J p = random_dyadic(t, rng);
  const J s = substitute_shift(p);
  for (std::size_t k = 0; k < t->size(); ++k) {
    const auto e = t->exponent(k);
    if (e[0] + e[1] == 0) EXPECT_EQ(s[k], 0.0);
  }
}

TEST(SubstituteShiftTest, MatchesDirectEvaluation) {
  std::mt19937 rng(9);
  const auto t = MonomialTable::get(4, 4);
  const J p = random_dyadic(t, rng);
  const J s = substitute_shift(p);
  auto eval = [&](const J& j, const std::vector<double>& x) {
    double sum = 0.0;
    for (std::size_t k = 0; k < t->size(); ++k) {
      double m = j[k];
      const auto e = t->exponent(k);
      for (int i = 0; i < 4; ++i) m *= std::pow(x[i], e[i]);
      sum += m;
    }
    return sum;
  };
  const std::vector<double> at = {0.25, -0.5, 0.75, 0.5};
  const std::vector<double> shifted = {at[0] + at[2], at[1] + at[3], at[2], at[3]};
  const std::vector<double> pure = {at[2], at[3], at[2], at[3]};
  EXPECT_NEAR(eval(s, at), eval(p, shifted) - eval(p, pure), 1e-13);
}

TEST(EmbedTest, MovesVariables) {
  const auto small = MonomialTable::get(2, 2);
  const auto big = MonomialTable::get(4, 2);
  J j(small);
  j.set_coefficient(MultiIndex{1, 1}, 3.0);
  const J e = embed(j, big, 2);
  EXPECT_EQ(e.coefficient(MultiIndex{0, 0, 1, 1}), 3.0);
}

}  // namespace
}  // namespace dcinv
