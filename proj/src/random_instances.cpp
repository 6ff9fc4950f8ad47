#include "dcinv/random_instances.hpp"

#include <cmath>

#include "dcinv/complex_forms.hpp"

namespace dcinv {

Eigen::MatrixXd InstanceSampler::spd(int n) {
  Eigen::MatrixXd a(n, n);
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) a(r, c) = normal();
  }
  Eigen::MatrixXd g = a * a.transpose();
  g.diagonal().array() += kSpdShift;
  return g;
}

Eigen::MatrixXd InstanceSampler::spd_in_range(int n, double lo, double hi) {
  const Eigen::MatrixXd q = orthogonal(n);
  Eigen::VectorXd e(n);
  for (int k = 0; k < n; ++k) e(k) = std::exp(uniform(std::log(lo), std::log(hi)));
  return q * e.asDiagonal() * q.transpose();
}

Eigen::MatrixXd InstanceSampler::j_invariant(int n) { return j_average(spd(2 * n)); }

Eigen::MatrixXd InstanceSampler::j_invariant_in_range(int n, double lo, double hi) {
  return j_average(spd_in_range(2 * n, lo, hi));
}

Eigen::MatrixXd InstanceSampler::orthogonal(int n) {
  Eigen::MatrixXd a(n, n);
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) a(r, c) = normal();
  }
  Eigen::HouseholderQR<Eigen::MatrixXd> qr(a);
  Eigen::MatrixXd q = qr.householderQ();
  // Fix column signs so the distribution does not depend on QR conventions.
  const Eigen::MatrixXd r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int c = 0; c < n; ++c) {
    if (r(c, c) < 0) q.col(c) *= -1.0;
  }
  return q;
}

std::vector<double> InstanceSampler::covector(int n) {
  std::vector<double> xi(static_cast<std::size_t>(n));
  double norm = 0.0;
  do {
    norm = 0.0;
    for (auto& x : xi) {
      x = normal();
      norm += x * x;
    }
  } while (norm < 1e-6);
  return xi;
}

}  // namespace dcinv
