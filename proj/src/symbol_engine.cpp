#include "dcinv/symbol_engine.hpp"

namespace dcinv {

namespace {

Eigen::MatrixXd zero_block(int n, int rows_degree, int cols_degree) {
  return Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(basis_dimension(n, rows_degree)),
                               static_cast<Eigen::Index>(basis_dimension(n, cols_degree)));
}

QuadraticSymbol<double> build_real_symbol(int n, int m, const DualMetric& g) {
  if (n < 1 || m < 1 || m > n - 1) {
    throw DomainError("real symbol: need 1 <= m <= n-1, got n=" + std::to_string(n) +
                      " m=" + std::to_string(m));
  }
  if (g.dim() != n) throw ShapeError("real symbol: metric dimension mismatch");
  const auto lower_iota = interior_basis_matrices(n, m, g);      // Lambda^m -> Lambda^{m-1}
  const auto upper_iota = interior_basis_matrices(n, m + 1, g);  // Lambda^{m+1} -> Lambda^m
  std::vector<Eigen::MatrixXd> lower_eps;                          // Lambda^{m-1} -> Lambda^m
  std::vector<Eigen::MatrixXd> upper_eps;                          // Lambda^m -> Lambda^{m+1}
  for (int j = 1; j <= n; ++j) {
    lower_eps.push_back(wedge_basis_matrix(n, m - 1, j));
    upper_eps.push_back(wedge_basis_matrix(n, m, j));
  }
  const std::size_t dim = basis_dimension(n, m);
  std::vector<Eigen::MatrixXd> numerator;
  numerator.reserve(static_cast<std::size_t>(n * n));
  for (int j = 0; j < n; ++j) {
    for (int k = 0; k < n; ++k) {
      Eigen::MatrixXd q = zero_block(n, m, m);
      q += lower_eps[j] * lower_iota[k];
      q -= upper_iota[k] * upper_eps[j];
      numerator.push_back(std::move(q));
    }
  }
  return QuadraticSymbol<double>(n, dim, numerator, g.matrix());
}

QuadraticSymbol<Complex> build_complex_symbol(int n, int p, int q, const JInvariantMetric& g) {
  if (n < 1 || p < 0 || p > n || q < 1 || q > n) {
    throw DomainError("complex symbol: need 0 <= p <= n and 1 <= q <= n");
  }
  if (g.n() != n) throw ShapeError("complex symbol: metric dimension mismatch");
  const auto dim = static_cast<Eigen::Index>(biform_dimension(n, p, q));
  const auto lower_iota = antiholo_interior_basis_matrices(n, p, q, g);
  std::vector<Eigen::MatrixXcd> upper_iota;
  if (q < n) upper_iota = antiholo_interior_basis_matrices(n, p, q + 1, g);
  // m_jk multiplies c_j conj(c_k).
  std::vector<Eigen::MatrixXcd> m(static_cast<std::size_t>(n * n));
  for (int j = 0; j < n; ++j) {
    const Eigen::MatrixXcd lower_eps = antiholo_wedge_basis_matrix(n, p, q - 1, j + 1);
    Eigen::MatrixXcd upper_eps;
    if (q < n) upper_eps = antiholo_wedge_basis_matrix(n, p, q, j + 1);
    for (int k = 0; k < n; ++k) {
      Eigen::MatrixXcd block = lower_eps * lower_iota[k];
      if (q < n) block -= upper_iota[k] * upper_eps;
      m[static_cast<std::size_t>(j * n + k)] = std::move(block);
    }
  }
  // c_j conj(c_k) = x_j x_k - i x_j x_{n+k} + i x_{n+j} x_k + x_{n+j} x_{n+k}.
  const int nvars = 2 * n;
  const Complex i{0.0, 1.0};
  std::vector<Eigen::MatrixXcd> numerator(static_cast<std::size_t>(nvars * nvars),
                                          Eigen::MatrixXcd::Zero(dim, dim));
  auto at = [&](int a, int b) -> Eigen::MatrixXcd& {
    return numerator[static_cast<std::size_t>(a * nvars + b)];
  };
  for (int j = 0; j < n; ++j) {
    for (int k = 0; k < n; ++k) {
      const Eigen::MatrixXcd& block = m[static_cast<std::size_t>(j * n + k)];
      at(j, k) += block;
      at(j, n + k) -= i * block;
      at(n + j, k) += i * block;
      at(n + j, n + k) += block;
    }
  }
  return QuadraticSymbol<Complex>(nvars, static_cast<std::size_t>(dim), numerator,
                                  2.0 * g.matrix());
}

}  // namespace

RealFormSymbol::RealFormSymbol(int n, int m, const DualMetric& g)
    : n_(n), m_(m), symbol_(build_real_symbol(n, m, g)) {}

ComplexFormSymbol::ComplexFormSymbol(int n, int p, int q, const JInvariantMetric& g)
    : n_(n), p_(p), q_(q), symbol_(build_complex_symbol(n, p, q, g)) {}

RealSymbolContext::RealSymbolContext(int n, int m, DualMetric g1, DualMetric g2)
    : n_(n),
      m_(m),
      g1_(std::move(g1)),
      g2_(std::move(g2)),
      first_(n, m, g1_),
      second_(n, m, g2_),
      pairing_(first_.quadratic(), second_.quadratic()),
      constants_(real_trace_constants(n, m)) {}

ComplexSymbolContext::ComplexSymbolContext(int n, int p, int q, JInvariantMetric g1,
                                           JInvariantMetric g2)
    : n_(n),
      p_(p),
      q_(q),
      g1_(std::move(g1)),
      g2_(std::move(g2)),
      first_(n, p, q, g1_),
      second_(n, p, q, g2_),
      pairing_(first_.quadratic(), second_.quadratic()),
      constants_(complex_trace_constants(n, p, q)) {}

}  // namespace dcinv
