#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "dcinv/combinatorics.hpp"
#include "dcinv/errors.hpp"
#include "dcinv/operator_matrix.hpp"

namespace dcinv {

// Strictly increasing subset of {1, ..., n} labeling e^{i1} ^ ... ^ e^{im}.
class FormIndex {
 public:
  FormIndex() = default;
  explicit FormIndex(std::vector<int> indices);

  std::span<const int> indices() const { return indices_; }
  int degree() const { return static_cast<int>(indices_.size()); }
  bool contains(int j) const;
  std::string to_string() const;

  friend auto operator<=>(const FormIndex&, const FormIndex&) = default;

 private:
  std::vector<int> indices_;
};

// Lexicographically ordered basis of Lambda^m(R^n); empty for m < 0 or m > n.
std::vector<FormIndex> basis(int n, int m);
std::size_t basis_dimension(int n, int m);
// Position of `index` inside basis(n, index.degree()).
std::size_t basis_rank(int n, const FormIndex& index);

// Constant symmetric positive-definite matrix giving <xi, eta>_g = xi^T G eta
// on covectors.
class DualMetric {
 public:
  static constexpr double kSymmetryTolerance = 1e-10;

  // Throws MetricError on non-square, asymmetric or non-positive-definite input.
  explicit DualMetric(const Eigen::MatrixXd& g);
  static DualMetric identity(int n);

  int dim() const { return static_cast<int>(g_.rows()); }
  const Eigen::MatrixXd& matrix() const { return g_; }

  template <class R>
  R inner(std::span<const R> xi, std::span<const R> eta) const {
    check(xi.size());
    check(eta.size());
    R sum = zero_like(xi[0]);
    for (int i = 0; i < dim(); ++i) {
      R gi = zero_like(xi[0]);
      for (int j = 0; j < dim(); ++j) {
        if (g_(i, j) != 0.0) scale_add(gi, g_(i, j), eta[j]);
      }
      multiply_add(sum, xi[i], gi);
    }
    return sum;
  }

  DualMetric scaled(double lambda) const;

 private:
  void check(std::size_t size) const;
  Eigen::MatrixXd g_;
};

// Induced inner product on Lambda^m: entry (I, J) is det(G[I, J]).
Eigen::MatrixXd gram_matrix(int n, int m, const DualMetric& g);

// epsilon(e^j) on Lambda^m as a C(n, m+1) x C(n, m) matrix, j = 1..n.
Eigen::MatrixXd wedge_basis_matrix(int n, int m, int j);

// iota_g(e^j) = M_{m-1}^{-1} epsilon(e^j)^T M_m on Lambda^m, for j = 1..n.
std::vector<Eigen::MatrixXd> interior_basis_matrices(int n, int m, const DualMetric& g);

void check_degree(int n, int m);

// epsilon(xi): Lambda^m -> Lambda^{m+1}.
template <class R>
OperatorMatrix<R> wedge_matrix(int n, int m, std::span<const R> xi) {
  check_degree(n, m);
  if (static_cast<int>(xi.size()) != n) {
    throw ShapeError("wedge_matrix: covector has length " + std::to_string(xi.size()) +
                     ", expected " + std::to_string(n));
  }
  const auto source = basis(n, m);
  OperatorMatrix<R> out(basis_dimension(n, m + 1), source.size(), zero_like(xi[0]));
  for (std::size_t col = 0; col < source.size(); ++col) {
    const auto idx = source[col].indices();
    for (int j = 1; j <= n; ++j) {
      if (source[col].contains(j)) continue;
      std::vector<int> merged;
      int below = 0;
      for (int i : idx) {
        if (i < j) ++below;
      }
      merged.assign(idx.begin(), idx.end());
      merged.insert(merged.begin() + below, j);
      const std::size_t row = basis_rank(n, FormIndex(std::move(merged)));
      out(row, col) = (below % 2 == 0) ? xi[j - 1] : -xi[j - 1];
    }
  }
  return out;
}

// iota_g(xi): Lambda^m -> Lambda^{m-1}, the adjoint of epsilon(xi) for the
// induced inner products: M_{m-1}^{-1} epsilon(xi)^T M_m.
template <class R>
OperatorMatrix<R> interior_matrix(int n, int m, const DualMetric& g, std::span<const R> xi) {
  check_degree(n, m);
  if (g.dim() != n) throw ShapeError("interior_matrix: metric dimension mismatch");
  if (static_cast<int>(xi.size()) != n) {
    throw ShapeError("interior_matrix: covector has length " + std::to_string(xi.size()) +
                     ", expected " + std::to_string(n));
  }
  return linear_combination<R, double>(interior_basis_matrices(n, m, g), xi,
                                       basis_dimension(n, m - 1), basis_dimension(n, m));
}

}  // namespace dcinv
