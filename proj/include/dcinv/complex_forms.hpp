#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "dcinv/exterior_real.hpp"
#include "dcinv/operator_matrix.hpp"
#include "dcinv/ring.hpp"

// (p,q)-forms on R^{2n} = C^n with the standard complex structure.
// Coframe: lambda_j = (e^j + i e^{n+j}) / sqrt2, its conjugate lambda-bar_j.
namespace dcinv {

// Labels lambda_{holo} ^ lambda-bar_{anti}.
struct BiFormIndex {
  FormIndex holo;
  FormIndex anti;

  std::string to_string() const;
  friend auto operator<=>(const BiFormIndex&, const BiFormIndex&) = default;
};

// Basis of Lambda^{p,q}: lexicographic in holo, then in anti.
std::vector<BiFormIndex> biform_basis(int n, int p, int q);
std::size_t biform_dimension(int n, int p, int q);
std::size_t biform_rank(int n, const BiFormIndex& index);

// J e_j = e_{n+j}, J e_{n+j} = -e_j.
Eigen::MatrixXd complex_structure(int n);

// SPD 2n x 2n matrix commuting with the complex structure.
class JInvariantMetric {
 public:
  static constexpr double kTolerance = 1e-10;

  // Throws MetricError (shape, asymmetric, not positive definite, not J-invariant).
  explicit JInvariantMetric(const Eigen::MatrixXd& g);
  static JInvariantMetric identity(int n);

  int n() const { return static_cast<int>(real_.dim()) / 2; }
  const DualMetric& real() const { return real_; }
  const Eigen::MatrixXd& matrix() const { return real_.matrix(); }

  // Hermitian form on hat components: <x, y> = sum_jk x_j conj(y_k) H_jk.
  const Eigen::MatrixXcd& hat_form() const { return hat_form_; }

  // Hermitian products of the elementary covectors lambda_1..lambda_n,
  // lambda-bar_1..lambda-bar_n (conjugate-linear in the column slot).
  const Eigen::MatrixXcd& coframe_products() const { return coframe_; }

  JInvariantMetric scaled(double lambda) const;

 private:
  DualMetric real_;
  Eigen::MatrixXcd hat_form_;
  Eigen::MatrixXcd coframe_;
};

// Components c_j of the (0,1)-covector sum_j c_j (e^j - i e^{n+j}).
template <class C>
struct HatCovector {
  std::vector<C> components;

  int n() const { return static_cast<int>(components.size()); }
};

// c_j = xi_j + i xi_{j+n}.
template <class R>
HatCovector<complexify_t<R>> hat(std::span<const R> xi) {
  if (xi.size() % 2 != 0 || xi.empty()) {
    throw DomainError("hat: covector length " + std::to_string(xi.size()) + " is not 2n");
  }
  const std::size_t n = xi.size() / 2;
  HatCovector<complexify_t<R>> out;
  out.components.reserve(n);
  const Complex i{0.0, 1.0};
  for (std::size_t j = 0; j < n; ++j) {
    out.components.push_back(to_complex(xi[j]) + to_complex(xi[j + n]) * i);
  }
  return out;
}

template <class C>
C hermitian_inner(const JInvariantMetric& g, const HatCovector<C>& x, const HatCovector<C>& y) {
  const int n = g.n();
  if (x.n() != n || y.n() != n) throw ShapeError("hermitian_inner: hat covector length mismatch");
  const Eigen::MatrixXcd& h = g.hat_form();
  C sum = zero_like(x.components[0]);
  for (int k = 0; k < n; ++k) {
    C hk = zero_like(x.components[0]);
    for (int j = 0; j < n; ++j) scale_add(hk, h(j, k), x.components[j]);
    multiply_add(sum, hk, conjugate(y.components[k]));
  }
  return sum;
}

// Hermitian Gram matrix of Lambda^{p,q}: entry (A, B) = <basis_A, basis_B>.
Eigen::MatrixXcd hermitian_gram(int n, int p, int q, const JInvariantMetric& g);

// epsilon(sqrt2 lambda-bar_j): Lambda^{p,q} -> Lambda^{p,q+1}, j = 1..n.
Eigen::MatrixXcd antiholo_wedge_basis_matrix(int n, int p, int q, int j);

// Adjoints of the matrices above: Lambda^{p,q} -> Lambda^{p,q-1}, so that
// iota(x) = sum_j conj(c_j) K_j.
std::vector<Eigen::MatrixXcd> antiholo_interior_basis_matrices(int n, int p, int q,
                                                               const JInvariantMetric& g);

void check_bidegree(int n, int p, int q);

// Wedge with the (0,1)-covector x: Lambda^{p,q} -> Lambda^{p,q+1}.
template <class C>
OperatorMatrix<C> eps_antiholo(int n, int p, int q, const HatCovector<C>& x) {
  check_bidegree(n, p, q);
  if (q + 1 > n) throw DomainError("eps_antiholo: q + 1 exceeds n");
  if (x.n() != n) throw ShapeError("eps_antiholo: hat covector length mismatch");
  std::vector<Eigen::MatrixXcd> pieces;
  for (int j = 1; j <= n; ++j) pieces.push_back(antiholo_wedge_basis_matrix(n, p, q, j));
  return linear_combination<C, Complex>(pieces, std::span<const C>(x.components),
                                        biform_dimension(n, p, q + 1), biform_dimension(n, p, q));
}

// Hermitian adjoint of eps_antiholo(n, p, q - 1, x): Lambda^{p,q} -> Lambda^{p,q-1}.
template <class C>
OperatorMatrix<C> iota_antiholo(int n, int p, int q, const JInvariantMetric& g,
                                const HatCovector<C>& x) {
  check_bidegree(n, p, q);
  if (q < 1) throw DomainError("iota_antiholo: q must be at least 1");
  if (x.n() != n || g.n() != n) throw ShapeError("iota_antiholo: dimension mismatch");
  std::vector<C> conj_components;
  for (const auto& c : x.components) conj_components.push_back(conjugate(c));
  return linear_combination<C, Complex>(antiholo_interior_basis_matrices(n, p, q, g),
                                        std::span<const C>(conj_components),
                                        biform_dimension(n, p, q - 1), biform_dimension(n, p, q));
}

// Random-free helpers for building J-invariant matrices.
Eigen::MatrixXd j_average(const Eigen::MatrixXd& g);

}  // namespace dcinv
