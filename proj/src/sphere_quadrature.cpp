#include "dcinv/sphere_quadrature.hpp"

#include <cmath>
#include <cstdlib>
#include <numbers>

#include <Eigen/Dense>

#include <boost/math/special_functions/gamma.hpp>
#include <boost/math/special_functions/legendre.hpp>

namespace dcinv {

std::size_t default_thread_count() {
  if (const char* env = std::getenv("DCINV_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && v > 0) return static_cast<std::size_t>(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

double sphere_area(int d) {
  if (d < 1) throw DomainError("sphere_area: dimension must be positive");
  return 2.0 * std::pow(std::numbers::pi, 0.5 * d) / boost::math::tgamma(0.5 * d);
}

QuadratureRule::QuadratureRule(int dim, std::vector<double> nodes, std::vector<double> weights,
                               std::string description)
    : dim_(dim), nodes_(std::move(nodes)), weights_(std::move(weights)),
      description_(std::move(description)) {
  if (dim_ < 1 || nodes_.size() != weights_.size() * static_cast<std::size_t>(dim_)) {
    throw ShapeError("quadrature rule: node array does not match weights");
  }
}

double QuadratureRule::total_weight() const {
  double s = 0.0;
  for (double w : weights_) s += w;
  return s;
}

void gauss_legendre(int count, std::vector<double>& nodes, std::vector<double>& weights) {
  if (count < 1) throw DomainError("gauss_legendre: need at least one node");
  // legendre_p_zeros returns the non-negative half, ascending.
  const auto half = boost::math::legendre_p_zeros<double>(count);
  nodes.clear();
  weights.clear();
  auto weight = [count](double x) {
    const double dp = boost::math::legendre_p_prime<double>(count, x);
    return 2.0 / ((1.0 - x * x) * dp * dp);
  };
  for (auto it = half.rbegin(); it != half.rend(); ++it) {
    if (*it == 0.0) continue;
    nodes.push_back(-*it);
    weights.push_back(weight(*it));
  }
  for (double x : half) {
    nodes.push_back(x);
    weights.push_back(weight(x));
  }
}

QuadratureRule circle_rule(int count, bool antipodal_half) {
  if (count < 1) throw DomainError("circle_rule: need at least one node");
  if (antipodal_half && count % 2 != 0) throw DomainError("circle_rule: antipodal half needs even K");
  std::vector<double> nodes;
  std::vector<double> weights;
  nodes.reserve(2 * static_cast<std::size_t>(count));
  const double step = 2.0 * std::numbers::pi / count;
  const int kept = antipodal_half ? count / 2 : count;
  for (int k = 0; k < kept; ++k) {
    const double theta = step * k;
    nodes.push_back(std::cos(theta));
    nodes.push_back(std::sin(theta));
    weights.push_back(antipodal_half ? 2.0 * step : step);
  }
  return QuadratureRule(2, std::move(nodes), std::move(weights),
                        "circle trapezoid K=" + std::to_string(count) +
                            (antipodal_half ? " (antipodal half)" : ""));
}

void gauss_jacobi_symmetric(int count, double a, std::vector<double>& nodes,
                            std::vector<double>& weights) {
  if (count < 1) throw DomainError("gauss_jacobi_symmetric: need at least one node");
  if (a == 0.0) {
    gauss_legendre(count, nodes, weights);
    return;
  }
  // Golub-Welsch on the symmetric Jacobi matrix of the weight (1 - t^2)^a.
  Eigen::MatrixXd jm = Eigen::MatrixXd::Zero(count, count);
  for (int k = 1; k < count; ++k) {
    const double beta = k * (k + 2.0 * a) / ((2.0 * k + 2.0 * a + 1.0) * (2.0 * k + 2.0 * a - 1.0));
    jm(k, k - 1) = jm(k - 1, k) = std::sqrt(beta);
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(jm);
  const double mu0 = std::sqrt(std::numbers::pi) * boost::math::tgamma(a + 1.0) /
                     boost::math::tgamma(a + 1.5);
  nodes.resize(static_cast<std::size_t>(count));
  weights.resize(static_cast<std::size_t>(count));
  for (int k = 0; k < count; ++k) {
    nodes[k] = eig.eigenvalues()(k);
    const double v = eig.eigenvectors()(0, k);
    weights[k] = mu0 * v * v;
  }
  // Exact symmetry about t = 0.
  for (int k = 0; k < count / 2; ++k) {
    const int j = count - 1 - k;
    const double x = 0.5 * (nodes[j] - nodes[k]);
    const double w = 0.5 * (weights[j] + weights[k]);
    nodes[k] = -x;
    nodes[j] = x;
    weights[k] = weights[j] = w;
  }
  if (count % 2 == 1) nodes[count / 2] = 0.0;
}

QuadratureRule sphere_rule(int d, int level, bool antipodal_half) {
  if (d < 2) throw DomainError("sphere_rule: need d >= 2");
  if (level < 1) throw DomainError("sphere_rule: level must be at least 1");
  const int azimuths = 2 * level;
  const int kept = antipodal_half ? level : azimuths;
  const double fold = antipodal_half ? 2.0 : 1.0;
  std::string description = "sphere d=" + std::to_string(d) + " level=" + std::to_string(level);
  if (antipodal_half) description += " (antipodal half)";
  // Polar coordinate k (k = 0..d-3) is t_k = cos(phi_k) with weight
  // (1 - t^2)^{(d - 3 - k) / 2}, the sin^{d-2-k} Jacobian.
  const int polar = d - 2;
  std::vector<std::vector<double>> t(static_cast<std::size_t>(polar));
  std::vector<std::vector<double>> w(static_cast<std::size_t>(polar));
  for (int k = 0; k < polar; ++k) gauss_jacobi_symmetric(level, 0.5 * (d - 3 - k), t[k], w[k]);

  std::vector<double> nodes;
  std::vector<double> weights;
  std::vector<int> digit(static_cast<std::size_t>(polar), 0);
  std::vector<double> point(static_cast<std::size_t>(d));
  const double az_step = 2.0 * std::numbers::pi / azimuths;
  while (true) {
    double weight = fold * az_step;
    double radius = 1.0;  // product of sines so far
    for (int k = 0; k < polar; ++k) {
      const double c = t[k][digit[k]];
      point[k] = radius * c;
      weight *= w[k][digit[k]];
      radius *= std::sqrt((1.0 - c) * (1.0 + c));
    }
    for (int a = 0; a < kept; ++a) {
      const double theta = az_step * a;
      point[d - 2] = radius * std::cos(theta);
      point[d - 1] = radius * std::sin(theta);
      double norm = 0.0;
      for (double v : point) norm += v * v;
      norm = std::sqrt(norm);
      for (double v : point) nodes.push_back(v / norm);
      weights.push_back(weight);
    }
    int k = polar - 1;
    while (k >= 0 && digit[k] == level - 1) digit[k--] = 0;
    if (k < 0) break;
    ++digit[k];
  }
  return QuadratureRule(d, std::move(nodes), std::move(weights), std::move(description));
}

QuadratureRule radial_projection(const QuadratureRule& rule, const std::vector<double>& metric) {
  const auto d = static_cast<std::size_t>(rule.dim());
  if (metric.size() != d * d) throw ShapeError("radial_projection: metric size mismatch");
  std::vector<double> nodes;
  nodes.reserve(rule.size() * d);
  for (std::size_t k = 0; k < rule.size(); ++k) {
    const auto xi = rule.node(k);
    double q = 0.0;
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t j = 0; j < d; ++j) q += xi[i] * metric[i * d + j] * xi[j];
    }
    const double s = 1.0 / std::sqrt(q);
    for (double v : xi) nodes.push_back(v * s);
  }
  return QuadratureRule(rule.dim(), std::move(nodes),
                        std::vector<double>(rule.weights().begin(), rule.weights().end()),
                        rule.description() + " (metric-unit sphere)");
}

}  // namespace dcinv

namespace dcinv {

QuadratureRule homogeneous_pullback(const QuadratureRule& rule, const Eigen::MatrixXd& map) {
  const int d = rule.dim();
  if (map.rows() != d || map.cols() != d) throw ShapeError("homogeneous_pullback: map size mismatch");
  const double jac = std::abs(map.determinant());
  if (!(jac > 0.0)) throw DomainError("homogeneous_pullback: singular map");
  std::vector<double> nodes;
  nodes.reserve(rule.size() * static_cast<std::size_t>(d));
  std::vector<double> weights;
  weights.reserve(rule.size());
  for (std::size_t k = 0; k < rule.size(); ++k) {
    const auto eta = rule.node(k);
    for (int i = 0; i < d; ++i) {
      double v = 0.0;
      for (int j = 0; j < d; ++j) v += map(i, j) * eta[j];
      nodes.push_back(v);
    }
    weights.push_back(rule.weight(k) * jac);
  }
  return QuadratureRule(d, std::move(nodes), std::move(weights), rule.description() + " (linear pullback)");
}

}  // namespace dcinv
