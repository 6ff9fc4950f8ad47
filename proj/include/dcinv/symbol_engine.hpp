#pragma once

#include <cstddef>
#include <span>
#include <type_traits>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "dcinv/combinatorics.hpp"
#include "dcinv/complex_forms.hpp"
#include "dcinv/exterior_real.hpp"
#include "dcinv/operator_matrix.hpp"
#include "dcinv/ring.hpp"

namespace dcinv {

// Matrix-valued rational function x -> N(x) / d(x) with N and d homogeneous
// quadratic: N(x) = sum_{a,b} x_a x_b Q_ab, d(x) = x^T D x. The flat symbols
// are of this shape, so evaluation only needs the pairwise products x_a x_b.
template <class Coef>
class QuadraticSymbol {
 public:
  using Matrix = Eigen::Matrix<Coef, Eigen::Dynamic, Eigen::Dynamic>;

  QuadraticSymbol() = default;

  // numerator[a * nvars + b] = Q_ab.
  QuadraticSymbol(int nvars, std::size_t dim, const std::vector<Matrix>& numerator,
                  const Eigen::MatrixXd& denominator)
      : nvars_(nvars), dim_(dim) {
    for (int a = 0; a < nvars; ++a) {
      for (int b = a; b < nvars; ++b) pairs_.emplace_back(a, b);
    }
    entries_.resize(dim * dim);
    for (std::size_t k = 0; k < pairs_.size(); ++k) {
      const auto [a, b] = pairs_[k];
      Matrix s = numerator[static_cast<std::size_t>(a * nvars + b)];
      if (a != b) s += numerator[static_cast<std::size_t>(b * nvars + a)];
      for (std::size_t r = 0; r < dim; ++r) {
        for (std::size_t c = 0; c < dim; ++c) {
          const Coef v = s(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c));
          if (v != Coef{}) entries_[r * dim + c].emplace_back(k, v);
        }
      }
      const double d = (a == b) ? denominator(a, a) : denominator(a, b) + denominator(b, a);
      if (d != 0.0) denominator_.emplace_back(k, d);
    }
  }

  int nvars() const { return nvars_; }
  std::size_t dim() const { return dim_; }
  // Pairs (a, b), a <= b, in the order used by pair_matrix and
  // normalized_products.
  const std::vector<std::pair<int, int>>& pairs() const { return pairs_; }

  // S_k with N(x) = sum_k x_a x_b S_k.
  Matrix pair_matrix(std::size_t k) const {
    Matrix out = Matrix::Zero(static_cast<Eigen::Index>(dim_), static_cast<Eigen::Index>(dim_));
    for (std::size_t rc = 0; rc < entries_.size(); ++rc) {
      for (const auto& [kk, v] : entries_[rc]) {
        if (kk == k) out(static_cast<Eigen::Index>(rc / dim_), static_cast<Eigen::Index>(rc % dim_)) = v;
      }
    }
    return out;
  }

  // x_a x_b / d(x) for every pair.
  template <class R>
  std::vector<R> normalized_products(std::span<const R> x) const {
    if (static_cast<int>(x.size()) != nvars_) {
      throw ShapeError("symbol: covector has length " + std::to_string(x.size()) + ", expected " +
                       std::to_string(nvars_));
    }
    std::vector<R> products;
    products.reserve(pairs_.size());
    for (const auto& [a, b] : pairs_) products.push_back(x[a] * x[b]);
    R norm = zero_like(x[0]);
    for (const auto& [k, d] : denominator_) scale_add(norm, d, products[k]);
    const R inv = reciprocal(norm);
    for (auto& p : products) p = p * inv;
    return products;
  }

  // Real coefficients keep the scalar type; complex ones complexify it.
  template <class R>
  using result_t = typename std::conditional_t<std::is_same_v<Coef, double>, std::type_identity<R>,
                                               complexify<R>>::type;

  template <class R>
  OperatorMatrix<result_t<R>> evaluate(std::span<const R> x) const {
    if (static_cast<int>(x.size()) != nvars_) {
      throw ShapeError("symbol: covector has length " + std::to_string(x.size()) + ", expected " +
                       std::to_string(nvars_));
    }
    const std::vector<R> products = normalized_products(x);
    using Out = result_t<R>;
    const Out out_zero = zero_like(to_out<Out>(x[0]));
    OperatorMatrix<Out> out(dim_, dim_, out_zero);
    for (std::size_t rc = 0; rc < entries_.size(); ++rc) {
      if (entries_[rc].empty()) continue;
      Out& acc = out(rc / dim_, rc % dim_);
      for (const auto& [k, v] : entries_[rc]) scale_add(acc, v, to_out<Out>(products[k]));
    }
    return out;
  }

 private:
  template <class Out, class R>
  static Out to_out(const R& x) {
    if constexpr (std::is_same_v<Out, R>) {
      return x;
    } else {
      return to_complex(x);
    }
  }

  int nvars_ = 0;
  std::size_t dim_ = 0;
  std::vector<std::pair<int, int>> pairs_;
  std::vector<std::vector<std::pair<std::size_t, Coef>>> entries_;
  std::vector<std::pair<std::size_t, double>> denominator_;
};

// sigma_L(F)(xi) = (eps(xi) iota_g(xi) - iota_g(xi) eps(xi)) / |xi|_g^2 on
// Lambda^m(R^n), with the metric-dependent pieces precomputed.
class RealFormSymbol {
 public:
  RealFormSymbol(int n, int m, const DualMetric& g);

  int n() const { return n_; }
  int m() const { return m_; }
  std::size_t dim() const { return symbol_.dim(); }

  template <class R>
  OperatorMatrix<R> operator()(std::span<const R> xi) const {
    return symbol_.evaluate(xi);
  }

  const QuadraticSymbol<double>& quadratic() const { return symbol_; }

 private:
  int n_;
  int m_;
  QuadraticSymbol<double> symbol_;
};

// (eps(xi-hat) iota_g(xi-hat) - iota_g(xi-hat) eps(xi-hat)) / (2 |xi|_g^2) on
// Lambda^{p,q}, as a function of the real covector xi in R^{2n}.
class ComplexFormSymbol {
 public:
  ComplexFormSymbol(int n, int p, int q, const JInvariantMetric& g);

  int n() const { return n_; }
  int p() const { return p_; }
  int q() const { return q_; }
  std::size_t dim() const { return symbol_.dim(); }

  template <class R>
  OperatorMatrix<complexify_t<R>> operator()(std::span<const R> xi) const {
    return symbol_.evaluate(xi);
  }

  const QuadraticSymbol<Complex>& quadratic() const { return symbol_; }

 private:
  int n_;
  int p_;
  int q_;
  QuadraticSymbol<Complex> symbol_;
};

// Reference forms built from wedge_matrix / interior_matrix products.
template <class R>
OperatorMatrix<R> sigma_F_real(int n, int m, const DualMetric& g, std::span<const R> xi) {
  if (m < 1 || m > n - 1) throw DomainError("sigma_F_real: need 1 <= m <= n-1");
  OperatorMatrix<R> out = wedge_matrix<R>(n, m - 1, xi) * interior_matrix<R>(n, m, g, xi);
  out -= interior_matrix<R>(n, m + 1, g, xi) * wedge_matrix<R>(n, m, xi);
  return out.scale(reciprocal(g.inner(xi, xi)));
}

template <class R>
OperatorMatrix<complexify_t<R>> sigma_F_complex(int n, int p, int q, const JInvariantMetric& g,
                                                std::span<const R> xi) {
  if (q < 1 || q > n || p < 0 || p > n) throw DomainError("sigma_F_complex: need 1 <= q <= n");
  const auto x = hat(xi);
  OperatorMatrix<complexify_t<R>> out = eps_antiholo(n, p, q - 1, x) * iota_antiholo(n, p, q, g, x);
  if (q < n) out -= iota_antiholo(n, p, q + 1, g, x) * eps_antiholo(n, p, q, x);
  return out.scale(to_complex(reciprocal(2.0 * g.real().inner(xi, xi))));
}

// tr[s1(xi) s2(eta)] = sum_{k,l} W_kl p_k(xi) q_l(eta) with
// W_kl = tr(S1_k S2_l) and p_k, q_l the normalized pair products.
template <class Coef>
class TracePairing {
 public:
  using Matrix = Eigen::Matrix<Coef, Eigen::Dynamic, Eigen::Dynamic>;

  TracePairing() = default;
  TracePairing(const QuadraticSymbol<Coef>& s1, const QuadraticSymbol<Coef>& s2)
      : first_(s1), second_(s2) {
    if (s1.dim() != s2.dim() || s1.nvars() != s2.nvars()) {
      throw ShapeError("trace pairing: symbols act on different spaces");
    }
    const auto k1 = static_cast<Eigen::Index>(s1.pairs().size());
    const auto k2 = static_cast<Eigen::Index>(s2.pairs().size());
    weights_ = Matrix::Zero(k1, k2);
    std::vector<Matrix> right;
    for (Eigen::Index l = 0; l < k2; ++l) right.push_back(s2.pair_matrix(static_cast<std::size_t>(l)));
    for (Eigen::Index k = 0; k < k1; ++k) {
      const Matrix left = s1.pair_matrix(static_cast<std::size_t>(k));
      for (Eigen::Index l = 0; l < k2; ++l) {
        weights_(k, l) = left.cwiseProduct(right[static_cast<std::size_t>(l)].transpose()).sum();
      }
    }
  }

  const Matrix& weights() const { return weights_; }
  const QuadraticSymbol<Coef>& first() const { return first_; }
  const QuadraticSymbol<Coef>& second() const { return second_; }

  Coef operator()(std::span<const double> xi, std::span<const double> eta) const {
    const auto p = first_.normalized_products(xi);
    const auto q = second_.normalized_products(eta);
    Coef out{};
    for (Eigen::Index k = 0; k < weights_.rows(); ++k) {
      for (Eigen::Index l = 0; l < weights_.cols(); ++l) {
        out += weights_(k, l) * p[static_cast<std::size_t>(k)] * q[static_cast<std::size_t>(l)];
      }
    }
    return out;
  }

 private:
  QuadraticSymbol<Coef> first_;
  QuadraticSymbol<Coef> second_;
  Matrix weights_;
};

class RealSymbolContext {
 public:
  // Requires n >= 2, 1 <= m <= n - 1, both metrics of dimension n.
  RealSymbolContext(int n, int m, DualMetric g1, DualMetric g2);

  int n() const { return n_; }
  int m() const { return m_; }
  const DualMetric& g1() const { return g1_; }
  const DualMetric& g2() const { return g2_; }
  const RealFormSymbol& first() const { return first_; }
  const RealFormSymbol& second() const { return second_; }
  const TracePairing<double>& pairing() const { return pairing_; }
  TraceConstants constants() const { return constants_; }

 private:
  int n_;
  int m_;
  DualMetric g1_;
  DualMetric g2_;
  RealFormSymbol first_;
  RealFormSymbol second_;
  TracePairing<double> pairing_;
  TraceConstants constants_;
};

class ComplexSymbolContext {
 public:
  // Requires p + q == n, q >= 1, both metrics on R^{2n}.
  ComplexSymbolContext(int n, int p, int q, JInvariantMetric g1, JInvariantMetric g2);

  int n() const { return n_; }
  int p() const { return p_; }
  int q() const { return q_; }
  const JInvariantMetric& g1() const { return g1_; }
  const JInvariantMetric& g2() const { return g2_; }
  const ComplexFormSymbol& first() const { return first_; }
  const ComplexFormSymbol& second() const { return second_; }
  const TracePairing<Complex>& pairing() const { return pairing_; }
  TraceConstants constants() const { return constants_; }

 private:
  int n_;
  int p_;
  int q_;
  JInvariantMetric g1_;
  JInvariantMetric g2_;
  ComplexFormSymbol first_;
  ComplexFormSymbol second_;
  TracePairing<Complex> pairing_;
  TraceConstants constants_;
};

// tr[sigma_1(xi) sigma_2(eta)].
template <class R, class Context>
auto psi_matrix(const Context& ctx, std::span<const R> xi, std::span<const R> eta) {
  return trace_of_product(ctx.first()(xi), ctx.second()(eta));
}

namespace detail {
template <class R>
void require_nonzero(std::span<const R> xi, const char* what) {
  for (const auto& x : xi) {
    if (constant_part(x) != decltype(constant_part(x)){}) return;
  }
  throw DomainError(std::string(what) + ": zero covector");
}
}  // namespace detail

// a <xi,eta>_1 <xi,eta>_2 / (|xi|_1^2 |eta|_2^2) + b + shift.
template <class R>
R psi_closed(const RealSymbolContext& ctx, std::span<const R> xi, std::span<const R> eta,
             double shift = 0.0) {
  detail::require_nonzero(xi, "psi_closed");
  detail::require_nonzero(eta, "psi_closed");
  const TraceConstants k = ctx.constants();
  R num = ctx.g1().inner(xi, eta) * ctx.g2().inner(xi, eta);
  R den = ctx.g1().inner(xi, xi) * ctx.g2().inner(eta, eta);
  R out = num * reciprocal(den);
  R result = zero_like(out);
  scale_add(result, static_cast<double>(k.a), out);
  return result + one_like(out) * (static_cast<double>(k.b) + shift);
}

// a conj(<xi^, eta^>_1) <xi^, eta^>_2 / (|xi|_1^2 |eta|_2^2) + b + shift.
template <class R>
complexify_t<R> psi_closed(const ComplexSymbolContext& ctx, std::span<const R> xi,
                           std::span<const R> eta, double shift = 0.0) {
  using C = complexify_t<R>;
  detail::require_nonzero(xi, "psi_closed");
  detail::require_nonzero(eta, "psi_closed");
  const TraceConstants k = ctx.constants();
  const auto x = hat(xi);
  const auto y = hat(eta);
  C num = conjugate(hermitian_inner(ctx.g1(), x, y)) * hermitian_inner(ctx.g2(), x, y);
  C den = to_complex(ctx.g1().real().inner(xi, xi) * ctx.g2().real().inner(eta, eta));
  C out = num * reciprocal(den);
  C result = zero_like(out);
  scale_add(result, Complex(static_cast<double>(k.a)), out);
  return result + one_like(out) * Complex(static_cast<double>(k.b) + shift);
}

}  // namespace dcinv
