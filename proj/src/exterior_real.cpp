#include "dcinv/exterior_real.hpp"

#include <algorithm>
#include <cmath>

namespace dcinv {

const char* to_string(MetricViolation violation) {
  switch (violation) {
    case MetricViolation::kShape:
      return "shape";
    case MetricViolation::kAsymmetric:
      return "asymmetric";
    case MetricViolation::kNotPositiveDefinite:
      return "not positive definite";
    case MetricViolation::kNotJInvariant:
      return "not J-invariant";
  }
  return "unknown";
}

FormIndex::FormIndex(std::vector<int> indices) : indices_(std::move(indices)) {
  for (std::size_t i = 0; i < indices_.size(); ++i) {
    if (indices_[i] < 1 || (i > 0 && indices_[i] <= indices_[i - 1])) {
      throw DomainError("form index must be strictly increasing and >= 1: " + to_string());
    }
  }
}

bool FormIndex::contains(int j) const {
  return std::binary_search(indices_.begin(), indices_.end(), j);
}

std::string FormIndex::to_string() const {
  std::string s = "{";
  for (std::size_t i = 0; i < indices_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(indices_[i]);
  }
  return s + "}";
}

std::vector<FormIndex> basis(int n, int m) {
  std::vector<FormIndex> out;
  if (n < 0 || m < 0 || m > n) return out;
  std::vector<int> current(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) current[i] = i + 1;
  while (true) {
    out.emplace_back(current);
    int i = m - 1;
    while (i >= 0 && current[i] == n - m + i + 1) --i;
    if (i < 0) break;
    ++current[i];
    for (int k = i + 1; k < m; ++k) current[k] = current[k - 1] + 1;
  }
  return out;
}

std::size_t basis_dimension(int n, int m) {
  if (n < 0 || m < 0 || m > n) return 0;
  return static_cast<std::size_t>(binomial(n, m));
}

std::size_t basis_rank(int n, const FormIndex& index) {
  const auto idx = index.indices();
  const int m = index.degree();
  if (m > n || (m > 0 && idx.back() > n)) {
    throw DomainError("form index " + index.to_string() + " outside dimension " + std::to_string(n));
  }
  // Count the subsets that agree on a prefix and then take a smaller element.
  std::size_t rank = 0;
  int previous = 0;
  for (int i = 0; i < m; ++i) {
    for (int j = previous + 1; j < idx[i]; ++j) {
      rank += static_cast<std::size_t>(binomial(n - j, m - i - 1));
    }
    previous = idx[i];
  }
  return rank;
}

void check_degree(int n, int m) {
  if (n < 1 || m < 0 || m > n) {
    throw DomainError("form degree " + std::to_string(m) + " outside [0, " + std::to_string(n) + "]");
  }
}

DualMetric::DualMetric(const Eigen::MatrixXd& g) {
  if (g.rows() == 0 || g.rows() != g.cols()) {
    throw MetricError(MetricViolation::kShape, "metric must be a non-empty square matrix");
  }
  const double scale = std::max(1.0, g.cwiseAbs().maxCoeff());
  const double asym = (g - g.transpose()).cwiseAbs().maxCoeff();
  if (!(asym <= kSymmetryTolerance * scale)) {
    throw MetricError(MetricViolation::kAsymmetric,
                      "metric is not symmetric (max |G - G^T| = " + std::to_string(asym) + ")");
  }
  g_ = 0.5 * (g + g.transpose());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(g_, Eigen::EigenvaluesOnly);
  const double lowest = eig.eigenvalues().minCoeff();
  if (!(lowest > 0.0) || Eigen::LLT<Eigen::MatrixXd>(g_).info() != Eigen::Success) {
    throw MetricError(MetricViolation::kNotPositiveDefinite,
                      "metric is not positive definite (smallest eigenvalue " +
                          std::to_string(lowest) + ")");
  }
}

DualMetric DualMetric::identity(int n) {
  return DualMetric(Eigen::MatrixXd::Identity(n, n));
}

DualMetric DualMetric::scaled(double lambda) const { return DualMetric(lambda * g_); }

void DualMetric::check(std::size_t size) const {
  if (static_cast<int>(size) != dim()) {
    throw ShapeError("covector length " + std::to_string(size) + " does not match metric dimension " +
                     std::to_string(dim()));
  }
}

Eigen::MatrixXd gram_matrix(int n, int m, const DualMetric& g) {
  check_degree(n, m);
  if (g.dim() != n) throw ShapeError("gram_matrix: metric dimension mismatch");
  const auto forms = basis(n, m);
  const auto size = static_cast<Eigen::Index>(forms.size());
  Eigen::MatrixXd gram(size, size);
  Eigen::MatrixXd block(m, m);
  for (Eigen::Index a = 0; a < size; ++a) {
    for (Eigen::Index b = a; b < size; ++b) {
      const auto ia = forms[a].indices();
      const auto ib = forms[b].indices();
      for (int r = 0; r < m; ++r) {
        for (int c = 0; c < m; ++c) block(r, c) = g.matrix()(ia[r] - 1, ib[c] - 1);
      }
      const double d = (m == 0) ? 1.0 : block.determinant();
      gram(a, b) = d;
      gram(b, a) = d;
    }
  }
  return gram;
}

Eigen::MatrixXd wedge_basis_matrix(int n, int m, int j) {
  std::vector<double> e(static_cast<std::size_t>(n), 0.0);
  e[j - 1] = 1.0;
  const auto w = wedge_matrix<double>(n, m, e);
  Eigen::MatrixXd out(w.rows(), w.cols());
  for (std::size_t r = 0; r < w.rows(); ++r) {
    for (std::size_t c = 0; c < w.cols(); ++c) out(r, c) = w(r, c);
  }
  return out;
}

std::vector<Eigen::MatrixXd> interior_basis_matrices(int n, int m, const DualMetric& g) {
  check_degree(n, m);
  if (g.dim() != n) throw ShapeError("interior_basis_matrices: metric dimension mismatch");
  std::vector<Eigen::MatrixXd> out;
  out.reserve(static_cast<std::size_t>(n));
  if (m == 0) {
    for (int j = 0; j < n; ++j) out.emplace_back(0, 1);
    return out;
  }
  const Eigen::MatrixXd target = gram_matrix(n, m, g);
  const Eigen::LDLT<Eigen::MatrixXd> source(gram_matrix(n, m - 1, g));
  for (int j = 1; j <= n; ++j) {
    out.push_back(source.solve(wedge_basis_matrix(n, m - 1, j).transpose() * target));
  }
  return out;
}

}  // namespace dcinv
