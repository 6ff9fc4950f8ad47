#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "dcinv/errors.hpp"
#include "dcinv/parallel.hpp"
#include "dcinv/ring.hpp"

namespace dcinv {

// Surface area of the unit sphere S^{d-1} in R^d.
double sphere_area(int d);

class QuadratureRule {
 public:
  QuadratureRule(int dim, std::vector<double> nodes, std::vector<double> weights,
                 std::string description);

  int dim() const { return dim_; }
  std::size_t size() const { return weights_.size(); }
  std::span<const double> node(std::size_t k) const {
    return {nodes_.data() + k * static_cast<std::size_t>(dim_), static_cast<std::size_t>(dim_)};
  }
  double weight(std::size_t k) const { return weights_[k]; }
  std::span<const double> weights() const { return weights_; }
  const std::string& description() const { return description_; }
  double total_weight() const;

 private:
  int dim_;
  std::vector<double> nodes_;  // row-major, size() x dim
  std::vector<double> weights_;
  std::string description_;
};

// theta_k = 2 pi k / K, weights 2 pi / K. With `antipodal_half` only the
// first K/2 nodes are kept at double weight, which is exact for even
// integrands (f(-x) = f(x)).
QuadratureRule circle_rule(int nodes, bool antipodal_half = false);

// Hyperspherical product rule on S^{d-1}: 2*level equispaced azimuths and
// `level` Gauss points in the cosine of each polar angle, with the sin^k
// Jacobian as the Gauss weight (Gauss-Legendre for k = 1). Exact for
// polynomials of degree <= 2*level - 1 restricted to the sphere. d = 2 gives
// circle_rule(2 * level). `antipodal_half` keeps azimuths in [0, pi) at
// double weight.
QuadratureRule sphere_rule(int d, int level, bool antipodal_half = false);

// Nodes of a rule pushed radially onto {|xi|_G = 1}; weights unchanged.
QuadratureRule radial_projection(const QuadratureRule& rule, const std::vector<double>& metric);

// For f homogeneous of degree -d: int_S f(xi) = |det L| int_S f(L eta).
// Returns the rule with nodes L eta_k (no longer unit) and weights scaled by
// |det L|; only valid for such integrands.
QuadratureRule homogeneous_pullback(const QuadratureRule& rule, const Eigen::MatrixXd& map);

// Gauss-Legendre nodes and weights on [-1, 1], ascending.
void gauss_legendre(int count, std::vector<double>& nodes, std::vector<double>& weights);

// Gauss rule for the weight (1 - t^2)^a on [-1, 1], ascending.
void gauss_jacobi_symmetric(int count, double a, std::vector<double>& nodes,
                            std::vector<double>& weights);

// Sum of w_k f(node_k) in node order. Throws EvaluationError for a
// non-finite value.
template <class F>
auto integrate(F&& f, const QuadratureRule& rule) {
  using R = decltype(f(rule.node(0)));
  R sum{};
  for (std::size_t k = 0; k < rule.size(); ++k) {
    const R value = f(rule.node(k));
    if (!is_finite(value)) {
      throw EvaluationError(k, "integrand is not finite at node " + std::to_string(k));
    }
    sum += rule.weight(k) * value;
  }
  return sum;
}

// Same sum, evaluated over fixed node blocks in parallel.
template <class F>
auto integrate_parallel(F&& f, const QuadratureRule& rule, std::size_t threads,
                        std::size_t block = 64) {
  using R = decltype(f(rule.node(0)));
  return ordered_block_reduce<R>(
      rule.size(), block, R{},
      [&](R& acc, std::size_t k) {
        const R value = f(rule.node(k));
        if (!is_finite(value)) {
          throw EvaluationError(k, "integrand is not finite at node " + std::to_string(k));
        }
        acc += rule.weight(k) * value;
      },
      [](R& out, const R& part) { out += part; }, threads);
}

}  // namespace dcinv
