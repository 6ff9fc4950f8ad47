#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "dcinv/combinatorics.hpp"
#include "dcinv/errors.hpp"

namespace dcinv {

using MultiIndex = std::vector<int>;

int total_degree(std::span<const int> alpha);
// alpha! = prod_i alpha_i!
double multi_factorial(std::span<const int> alpha);
std::string to_string(std::span<const int> alpha);

// All monomials in `nvars` variables of total degree <= cap, in graded
// lexicographic order (degree first, then x_1 power descending), with a
// product lookup table. Shared between every jet of the same shape.
class MonomialTable {
 public:
  static constexpr int kMaxVars = 16;
  static constexpr int kMaxCap = 15;

  // Cached; throws DomainError outside 1 <= nvars <= 16, 0 <= cap <= 15.
  static std::shared_ptr<const MonomialTable> get(int nvars, int cap);

  MonomialTable(int nvars, int cap);

  int nvars() const noexcept { return nvars_; }
  int cap() const noexcept { return cap_; }
  std::size_t size() const noexcept { return degrees_.size(); }

  std::span<const int> exponent(std::size_t i) const {
    return {exponents_.data() + i * static_cast<std::size_t>(nvars_),
            static_cast<std::size_t>(nvars_)};
  }
  int degree(std::size_t i) const { return degrees_[i]; }

  // [degree_begin(d), degree_begin(d + 1)) holds the degree-d monomials.
  std::size_t degree_begin(int d) const;

  // Index of x^alpha, or -1 when alpha has the wrong length, a negative
  // entry, or degree above cap.
  std::ptrdiff_t find(std::span<const int> alpha) const;

  // For monomial i, entry j of the row is the index of x^(e_i + e_j); the row
  // covers every j with degree(j) <= cap - degree(i).
  std::span<const std::uint32_t> product_row(std::size_t i) const {
    return {targets_.data() + row_offsets_[i], row_offsets_[i + 1] - row_offsets_[i]};
  }

 private:
  static std::uint64_t pack(std::span<const int> alpha);

  int nvars_;
  int cap_;
  std::vector<int> exponents_;
  std::vector<int> degrees_;
  std::vector<std::size_t> degree_offsets_;
  std::unordered_map<std::uint64_t, std::uint32_t> lookup_;
  std::vector<std::size_t> row_offsets_;
  std::vector<std::uint32_t> targets_;
};

// Truncated Taylor polynomial: coefficient k is d^alpha f / alpha! at the
// expansion point, alpha = table.exponent(k). Products drop every monomial
// above the cap.
template <class T>
class Jet {
 public:
  using value_type = T;

  Jet() = default;
  explicit Jet(std::shared_ptr<const MonomialTable> table)
      : table_(std::move(table)), coeffs_(table_->size(), T{}) {}

  static Jet constant(std::shared_ptr<const MonomialTable> table, const T& c) {
    Jet j(std::move(table));
    j.coeffs_[0] = c;
    return j;
  }

  // value + x_i, i.e. the jet of the i-th coordinate expanded at `value`.
  static Jet variable(std::shared_ptr<const MonomialTable> table, int i, const T& value) {
    if (i < 0 || i >= table->nvars()) {
      throw DomainError("jet variable index " + std::to_string(i) + " out of range");
    }
    Jet j = constant(std::move(table), value);
    if (j.table_->cap() >= 1) j.coeffs_[1 + static_cast<std::size_t>(i)] = T{1};
    return j;
  }

  bool empty() const noexcept { return !table_; }
  const MonomialTable& table() const { return *table_; }
  const std::shared_ptr<const MonomialTable>& table_ptr() const { return table_; }
  int nvars() const { return table_->nvars(); }
  int cap() const { return table_->cap(); }

  std::span<const T> coefficients() const { return coeffs_; }
  std::span<T> coefficients() { return coeffs_; }
  const T& operator[](std::size_t k) const { return coeffs_[k]; }
  T& operator[](std::size_t k) { return coeffs_[k]; }

  const T& constant_term() const { return coeffs_[0]; }

  // Taylor coefficient of x^alpha; zero above the cap.
  T coefficient(std::span<const int> alpha) const {
    check_length(alpha);
    const std::ptrdiff_t k = table_->find(alpha);
    return k < 0 ? T{} : coeffs_[static_cast<std::size_t>(k)];
  }

  // alpha! times the Taylor coefficient.
  T derivative(std::span<const int> alpha) const {
    return coefficient(alpha) * multi_factorial(alpha);
  }

  void set_coefficient(std::span<const int> alpha, const T& value) {
    check_length(alpha);
    const std::ptrdiff_t k = table_->find(alpha);
    if (k < 0) throw DomainError("monomial " + to_string(alpha) + " exceeds jet cap");
    coeffs_[static_cast<std::size_t>(k)] = value;
  }

  Jet& operator+=(const Jet& o) {
    check_same(o);
    for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
    return *this;
  }
  Jet& operator-=(const Jet& o) {
    check_same(o);
    for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
    return *this;
  }
  Jet& operator+=(const T& c) {
    coeffs_[0] += c;
    return *this;
  }
  Jet& operator-=(const T& c) {
    coeffs_[0] -= c;
    return *this;
  }
  Jet& operator*=(const T& c) {
    for (auto& x : coeffs_) x *= c;
    return *this;
  }
  Jet& operator/=(const T& c) {
    for (auto& x : coeffs_) x /= c;
    return *this;
  }
  Jet& operator*=(const Jet& o) {
    *this = *this * o;
    return *this;
  }

  // this += a * b without temporaries.
  void add_product(const Jet& a, const Jet& b) {
    check_same(a);
    check_same(b);
    const MonomialTable& t = *table_;
    const std::size_t size = coeffs_.size();
    for (std::size_t i = 0; i < size; ++i) {
      const T& ai = a.coeffs_[i];
      if (ai == T{}) continue;
      const auto row = t.product_row(i);
      for (std::size_t j = 0; j < row.size(); ++j) coeffs_[row[j]] += ai * b.coeffs_[j];
    }
  }

  // this += c * a.
  void add_scaled(const T& c, const Jet& a) {
    check_same(a);
    for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += c * a.coeffs_[k];
  }

  friend Jet operator+(Jet a, const Jet& b) { return a += b; }
  friend Jet operator-(Jet a, const Jet& b) { return a -= b; }
  friend Jet operator-(Jet a) {
    for (auto& x : a.coeffs_) x = -x;
    return a;
  }
  friend Jet operator+(Jet a, const T& c) { return a += c; }
  friend Jet operator+(const T& c, Jet a) { return a += c; }
  friend Jet operator-(Jet a, const T& c) { return a -= c; }
  friend Jet operator-(const T& c, const Jet& a) { return -a + c; }
  friend Jet operator*(Jet a, const T& c) { return a *= c; }
  friend Jet operator*(const T& c, Jet a) { return a *= c; }
  friend Jet operator/(Jet a, const T& c) { return a /= c; }
  friend Jet operator*(const Jet& a, const Jet& b) {
    Jet out(a.table_);
    out.add_product(a, b);
    return out;
  }

  friend bool operator==(const Jet& a, const Jet& b) {
    return a.table_ == b.table_ && a.coeffs_ == b.coeffs_;
  }

  Jet conj() const {
    Jet out = *this;
    if constexpr (!std::is_floating_point_v<T>) {
      for (auto& x : out.coeffs_) x = std::conj(x);
    }
    return out;
  }

 private:
  void check_same(const Jet& o) const {
    if (table_ != o.table_) throw ShapeError("jet operands have different shapes");
  }
  void check_length(std::span<const int> alpha) const {
    if (static_cast<int>(alpha.size()) != table_->nvars()) {
      throw ShapeError("multi-index length " + std::to_string(alpha.size()) +
                       " does not match " + std::to_string(table_->nvars()) + " variables");
    }
  }

  std::shared_ptr<const MonomialTable> table_;
  std::vector<T> coeffs_;
};

// Scalar by real scalar for complex jets.
template <class T>
  requires(!std::is_same_v<T, double>)
Jet<T> operator*(Jet<T> a, double c) {
  return a *= T(c);
}
template <class T>
  requires(!std::is_same_v<T, double>)
Jet<T> operator*(double c, Jet<T> a) {
  return a *= T(c);
}
template <class T>
  requires(!std::is_same_v<T, double>)
Jet<T> operator+(Jet<T> a, double c) {
  return a += T(c);
}

// 1 / j via the geometric series in (j - j0) / j0, truncated at the cap.
template <class T>
Jet<T> inverse(const Jet<T>& j) {
  const T c0 = j.constant_term();
  if (c0 == T{}) throw SingularPointError("jet inverse: constant term is zero");
  Jet<T> t = j;
  t[0] = T{};
  t *= -T{1} / c0;
  Jet<T> sum = Jet<T>::constant(j.table_ptr(), T{1});
  for (int k = 1; k <= j.cap(); ++k) {
    sum = t * sum;
    sum[0] += T{1};
  }
  return sum * (T{1} / c0);
}

// Keeps the monomials u^beta v^delta with |beta| + |delta| = order, |beta| >= 1
// and |delta| >= 1. Variables 0..k-1 are u, k..2k-1 are v.
template <class T>
Jet<T> t_prime(const Jet<T>& psi, int order) {
  const MonomialTable& table = psi.table();
  if (table.nvars() % 2 != 0) throw ShapeError("t_prime: odd number of jet variables");
  if (table.cap() < order) {
    throw DomainError("t_prime: jet cap " + std::to_string(table.cap()) +
                      " below order " + std::to_string(order));
  }
  const int half = table.nvars() / 2;
  Jet<T> out(psi.table_ptr());
  if (order < 0) return out;
  for (std::size_t k = table.degree_begin(order); k < table.degree_begin(order + 1); ++k) {
    const auto e = table.exponent(k);
    int du = 0;
    for (int i = 0; i < half; ++i) du += e[i];
    if (du >= 1 && du <= order - 1) out[k] = psi[k];
  }
  return out;
}

// P(u + v, v) - P(v, v).
template <class T>
Jet<T> substitute_shift(const Jet<T>& p) {
  const MonomialTable& table = p.table();
  if (table.nvars() % 2 != 0) throw ShapeError("substitute_shift: odd number of jet variables");
  const int half = table.nvars() / 2;
  Jet<T> out(p.table_ptr());
  MultiIndex target(static_cast<std::size_t>(table.nvars()));
  std::vector<int> take(static_cast<std::size_t>(half));
  for (std::size_t k = 0; k < table.size(); ++k) {
    if (p[k] == T{}) continue;
    const auto e = table.exponent(k);
    // Expand prod_i (u_i + v_i)^{e_i}: keep k_i powers of u_i and e_i - k_i of v_i.
    std::fill(take.begin(), take.end(), 0);
    while (true) {
      int i = 0;
      while (i < half && take[i] == e[i]) take[i++] = 0;
      if (i == half) break;
      ++take[i];
      double weight = 1.0;
      for (int r = 0; r < half; ++r) {
        weight *= static_cast<double>(binomial(e[r], take[r]));
        target[r] = take[r];
        target[half + r] = e[half + r] + e[r] - take[r];
      }
      out[static_cast<std::size_t>(table.find(target))] += p[k] * weight;
    }
  }
  return out;
}

// Copies a jet in k variables into a jet with more variables, mapping
// variable i to variable offset + i.
template <class T>
Jet<T> embed(const Jet<T>& j, std::shared_ptr<const MonomialTable> target, int offset) {
  const MonomialTable& src = j.table();
  if (offset < 0 || offset + src.nvars() > target->nvars()) {
    throw ShapeError("embed: variable block does not fit");
  }
  Jet<T> out(target);
  MultiIndex alpha(static_cast<std::size_t>(target->nvars()), 0);
  for (std::size_t k = 0; k < src.size(); ++k) {
    if (src.degree(k) > target->cap()) break;
    const auto e = src.exponent(k);
    for (int i = 0; i < src.nvars(); ++i) alpha[offset + i] = e[i];
    out[static_cast<std::size_t>(target->find(alpha))] = j[k];
  }
  return out;
}

}  // namespace dcinv
