#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "dcinv/errors.hpp"
#include "dcinv/ring.hpp"

namespace dcinv {

// Dense row-major matrix over a scalar ring R. Keeps a zero element so that
// empty products and traces of jet-valued matrices have the right shape.
template <class R>
class OperatorMatrix {
 public:
  using value_type = R;

  OperatorMatrix() = default;
  OperatorMatrix(std::size_t rows, std::size_t cols, const R& zero)
      : rows_(rows), cols_(cols), zero_(zero), data_(rows * cols, zero) {}

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  const R& zero() const noexcept { return zero_; }

  R& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const R& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  OperatorMatrix& operator+=(const OperatorMatrix& o) {
    check_same_shape(o);
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
    return *this;
  }
  OperatorMatrix& operator-=(const OperatorMatrix& o) {
    check_same_shape(o);
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
    return *this;
  }
  // Entrywise multiplication by a ring element or a constant.
  template <class S>
  OperatorMatrix& scale(const S& s) {
    for (auto& x : data_) x = x * s;
    return *this;
  }

  friend OperatorMatrix operator+(OperatorMatrix a, const OperatorMatrix& b) { return a += b; }
  friend OperatorMatrix operator-(OperatorMatrix a, const OperatorMatrix& b) { return a -= b; }

  friend OperatorMatrix operator*(const OperatorMatrix& a, const OperatorMatrix& b) {
    if (a.cols_ != b.rows_) {
      throw ShapeError("matrix product: " + shape(a) + " times " + shape(b));
    }
    OperatorMatrix out(a.rows_, b.cols_, a.zero_);
    for (std::size_t r = 0; r < a.rows_; ++r) {
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const R& ark = a(r, k);
        for (std::size_t c = 0; c < b.cols_; ++c) multiply_add(out(r, c), ark, b(k, c));
      }
    }
    return out;
  }

  static std::string shape(const OperatorMatrix& m) {
    return std::to_string(m.rows_) + "x" + std::to_string(m.cols_);
  }

 private:
  void check_same_shape(const OperatorMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) {
      throw ShapeError("matrix sum: " + shape(*this) + " vs " + shape(o));
    }
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  R zero_{};
  std::vector<R> data_;
};

template <class R>
R trace(const OperatorMatrix<R>& m) {
  if (m.rows() != m.cols()) {
    throw ShapeError("trace of non-square matrix " + OperatorMatrix<R>::shape(m));
  }
  R t = m.zero();
  for (std::size_t i = 0; i < m.rows(); ++i) t += m(i, i);
  return t;
}

// tr(a b) without forming the product.
template <class R>
R trace_of_product(const OperatorMatrix<R>& a, const OperatorMatrix<R>& b) {
  if (a.cols() != b.rows() || a.rows() != b.cols()) {
    throw ShapeError("trace of product: " + OperatorMatrix<R>::shape(a) + " times " +
                     OperatorMatrix<R>::shape(b));
  }
  R t = a.zero();
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) multiply_add(t, a(r, c), b(c, r));
  }
  return t;
}

// sum_j x_j * basis[j] for constant (Eigen) matrices basis[j].
template <class R, class Coef>
OperatorMatrix<R> linear_combination(const std::vector<Eigen::Matrix<Coef, -1, -1>>& basis,
                                     std::span<const R> x, std::size_t rows, std::size_t cols) {
  if (basis.size() != x.size()) throw ShapeError("linear combination: size mismatch");
  OperatorMatrix<R> out(rows, cols, zero_like(x.empty() ? R{} : x[0]));
  for (std::size_t j = 0; j < basis.size(); ++j) {
    const auto& b = basis[j];
    for (std::size_t r = 0; r < rows; ++r) {
      for (std::size_t c = 0; c < cols; ++c) {
        const Coef v = b(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c));
        if (v != Coef{}) scale_add(out(r, c), v, x[j]);
      }
    }
  }
  return out;
}

template <class R>
OperatorMatrix<R> transpose(const OperatorMatrix<R>& m) {
  OperatorMatrix<R> out(m.cols(), m.rows(), m.zero());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) out(c, r) = m(r, c);
  }
  return out;
}

// Conjugate transpose.
template <class R>
OperatorMatrix<R> adjoint(const OperatorMatrix<R>& m) {
  OperatorMatrix<R> out(m.cols(), m.rows(), m.zero());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) out(c, r) = conjugate(m(r, c));
  }
  return out;
}

// Constant matrix times ring matrix and ring matrix times constant matrix.
template <class R, class Coef>
OperatorMatrix<R> left_multiply(const Eigen::Matrix<Coef, -1, -1>& c, const OperatorMatrix<R>& m) {
  if (static_cast<std::size_t>(c.cols()) != m.rows()) throw ShapeError("left_multiply: shape mismatch");
  OperatorMatrix<R> out(static_cast<std::size_t>(c.rows()), m.cols(), m.zero());
  for (Eigen::Index r = 0; r < c.rows(); ++r) {
    for (Eigen::Index k = 0; k < c.cols(); ++k) {
      const Coef v = c(r, k);
      if (v == Coef{}) continue;
      for (std::size_t col = 0; col < m.cols(); ++col) {
        scale_add(out(static_cast<std::size_t>(r), col), v, m(static_cast<std::size_t>(k), col));
      }
    }
  }
  return out;
}

template <class R, class Coef>
OperatorMatrix<R> right_multiply(const OperatorMatrix<R>& m, const Eigen::Matrix<Coef, -1, -1>& c) {
  if (m.cols() != static_cast<std::size_t>(c.rows())) throw ShapeError("right_multiply: shape mismatch");
  OperatorMatrix<R> out(m.rows(), static_cast<std::size_t>(c.cols()), m.zero());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (Eigen::Index k = 0; k < c.rows(); ++k) {
      for (Eigen::Index col = 0; col < c.cols(); ++col) {
        const Coef v = c(k, col);
        if (v != Coef{}) scale_add(out(r, static_cast<std::size_t>(col)), v, m(r, static_cast<std::size_t>(k)));
      }
    }
  }
  return out;
}

}  // namespace dcinv
