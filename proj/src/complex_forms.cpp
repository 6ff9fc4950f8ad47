#include "dcinv/complex_forms.hpp"

#include <algorithm>
#include <cmath>

namespace dcinv {

std::string BiFormIndex::to_string() const { return holo.to_string() + anti.to_string(); }

void check_bidegree(int n, int p, int q) {
  if (n < 1 || p < 0 || q < 0 || p > n || q > n) {
    throw DomainError("bidegree (" + std::to_string(p) + "," + std::to_string(q) +
                      ") outside [0, " + std::to_string(n) + "]");
  }
}

std::vector<BiFormIndex> biform_basis(int n, int p, int q) {
  std::vector<BiFormIndex> out;
  const auto holo = basis(n, p);
  const auto anti = basis(n, q);
  for (const auto& h : holo) {
    for (const auto& a : anti) out.push_back(BiFormIndex{h, a});
  }
  return out;
}

std::size_t biform_dimension(int n, int p, int q) {
  return basis_dimension(n, p) * basis_dimension(n, q);
}

std::size_t biform_rank(int n, const BiFormIndex& index) {
  return basis_rank(n, index.holo) * basis_dimension(n, index.anti.degree()) +
         basis_rank(n, index.anti);
}

Eigen::MatrixXd complex_structure(int n) {
  Eigen::MatrixXd j = Eigen::MatrixXd::Zero(2 * n, 2 * n);
  for (int i = 0; i < n; ++i) {
    j(n + i, i) = 1.0;
    j(i, n + i) = -1.0;
  }
  return j;
}

Eigen::MatrixXd j_average(const Eigen::MatrixXd& g) {
  if (g.rows() % 2 != 0 || g.rows() != g.cols()) {
    throw MetricError(MetricViolation::kShape, "J-averaging needs an even square matrix");
  }
  const Eigen::MatrixXd j = complex_structure(static_cast<int>(g.rows() / 2));
  return 0.5 * (g + j.transpose() * g * j);
}

namespace {

DualMetric validated(const Eigen::MatrixXd& g) {
  if (g.rows() == 0 || g.rows() % 2 != 0 || g.rows() != g.cols()) {
    throw MetricError(MetricViolation::kShape, "J-invariant metric must be 2n x 2n");
  }
  DualMetric real(g);
  const Eigen::MatrixXd j = complex_structure(static_cast<int>(g.rows() / 2));
  const double scale = std::max(1.0, g.cwiseAbs().maxCoeff());
  const double defect = (real.matrix() * j - j * real.matrix()).cwiseAbs().maxCoeff();
  if (!(defect <= JInvariantMetric::kTolerance * scale)) {
    throw MetricError(MetricViolation::kNotJInvariant,
                      "metric does not commute with J (max |GJ - JG| = " + std::to_string(defect) + ")");
  }
  return real;
}

}  // namespace

JInvariantMetric::JInvariantMetric(const Eigen::MatrixXd& g) : real_(validated(g)) {
  const int n = this->n();
  const Eigen::MatrixXd& G = real_.matrix();
  const Complex i{0.0, 1.0};
  hat_form_.resize(n, n);
  for (int j = 0; j < n; ++j) {
    for (int k = 0; k < n; ++k) {
      hat_form_(j, k) = G(j, k) + i * G(j, n + k) - i * G(n + j, k) + G(n + j, n + k);
    }
  }
  const double r = 1.0 / std::sqrt(2.0);
  Eigen::MatrixXcd v = Eigen::MatrixXcd::Zero(2 * n, 2 * n);
  for (int j = 0; j < n; ++j) {
    v(j, j) = r;
    v(n + j, j) = i * r;
    v(j, n + j) = r;
    v(n + j, n + j) = -i * r;
  }
  coframe_ = v.transpose() * G.cast<Complex>() * v.conjugate();
}

JInvariantMetric JInvariantMetric::identity(int n) {
  return JInvariantMetric(Eigen::MatrixXd::Identity(2 * n, 2 * n));
}

JInvariantMetric JInvariantMetric::scaled(double lambda) const {
  return JInvariantMetric(lambda * matrix());
}

Eigen::MatrixXcd hermitian_gram(int n, int p, int q, const JInvariantMetric& g) {
  check_bidegree(n, p, q);
  if (g.n() != n) throw ShapeError("hermitian_gram: metric dimension mismatch");
  const auto forms = biform_basis(n, p, q);
  const auto size = static_cast<Eigen::Index>(forms.size());
  const int k = p + q;
  auto factors = [n](const BiFormIndex& f) {
    std::vector<int> out;
    for (int i : f.holo.indices()) out.push_back(i - 1);
    for (int j : f.anti.indices()) out.push_back(n + j - 1);
    return out;
  };
  Eigen::MatrixXcd gram(size, size);
  Eigen::MatrixXcd block(k, k);
  for (Eigen::Index a = 0; a < size; ++a) {
    const auto fa = factors(forms[a]);
    for (Eigen::Index b = 0; b < size; ++b) {
      const auto fb = factors(forms[b]);
      for (int r = 0; r < k; ++r) {
        for (int c = 0; c < k; ++c) block(r, c) = g.coframe_products()(fa[r], fb[c]);
      }
      gram(a, b) = (k == 0) ? Complex{1.0, 0.0} : block.determinant();
    }
  }
  return gram;
}

Eigen::MatrixXcd antiholo_wedge_basis_matrix(int n, int p, int q, int j) {
  check_bidegree(n, p, q);
  if (q + 1 > n) throw DomainError("antiholomorphic wedge: q + 1 exceeds n");
  const auto source = biform_basis(n, p, q);
  Eigen::MatrixXcd out =
      Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(biform_dimension(n, p, q + 1)),
                             static_cast<Eigen::Index>(source.size()));
  const double root2 = std::sqrt(2.0);
  for (std::size_t col = 0; col < source.size(); ++col) {
    const auto& f = source[col];
    if (f.anti.contains(j)) continue;
    const auto anti = f.anti.indices();
    const int below = static_cast<int>(std::count_if(anti.begin(), anti.end(), [j](int a) { return a < j; }));
    std::vector<int> merged(anti.begin(), anti.end());
    merged.insert(merged.begin() + below, j);
    const std::size_t row = biform_rank(n, BiFormIndex{f.holo, FormIndex(std::move(merged))});
    out(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col)) =
        ((p + below) % 2 == 0) ? root2 : -root2;
  }
  return out;
}

std::vector<Eigen::MatrixXcd> antiholo_interior_basis_matrices(int n, int p, int q,
                                                               const JInvariantMetric& g) {
  check_bidegree(n, p, q);
  if (q < 1) throw DomainError("antiholomorphic interior product needs q >= 1");
  // With H = conj(Gram) the product reads <x, y> = y^H H x, so the adjoint
  // of E is H_{q-1}^{-1} E^H H_q.
  const Eigen::MatrixXcd target = hermitian_gram(n, p, q, g).conjugate();
  const Eigen::LDLT<Eigen::MatrixXcd> source(hermitian_gram(n, p, q - 1, g).conjugate());
  std::vector<Eigen::MatrixXcd> out;
  for (int j = 1; j <= n; ++j) {
    out.push_back(source.solve(antiholo_wedge_basis_matrix(n, p, q - 1, j).adjoint() * target));
  }
  return out;
}

}  // namespace dcinv
