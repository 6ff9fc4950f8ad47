#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include <Eigen/Dense>

namespace dcinv {

// Seeded generator of test metrics and covectors.
class InstanceSampler {
 public:
  static constexpr double kSpdShift = 0.1;

  explicit InstanceSampler(std::uint64_t seed) : engine_(seed) {}

  double normal() { return normal_(engine_); }
  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(engine_); }

  // A A^T + 0.1 I with standard normal A.
  Eigen::MatrixXd spd(int n);
  // Q diag(e) Q^T with log e uniform in [log lo, log hi] and Q orthogonal.
  Eigen::MatrixXd spd_in_range(int n, double lo, double hi);
  // spd(2n) averaged with J^T G J, so it commutes with J.
  Eigen::MatrixXd j_invariant(int n);
  Eigen::MatrixXd j_invariant_in_range(int n, double lo, double hi);
  // Haar-ish orthogonal matrix from the QR factorization of a normal matrix.
  Eigen::MatrixXd orthogonal(int n);
  // Standard normal entries, rejecting the (measure zero) all-tiny case.
  std::vector<double> covector(int n);

  std::mt19937_64& engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
  std::normal_distribution<double> normal_{0.0, 1.0};
};

}  // namespace dcinv
