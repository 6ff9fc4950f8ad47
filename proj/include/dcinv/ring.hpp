#pragma once

#include <cmath>
#include <complex>
#include <type_traits>

#include "dcinv/errors.hpp"
#include "dcinv/jet.hpp"

// Uniform access to the scalar rings the symbol calculus runs over: double,
// std::complex<double>, and jets of either.
namespace dcinv {

using Complex = std::complex<double>;

template <class R>
struct is_jet : std::false_type {};
template <class T>
struct is_jet<Jet<T>> : std::true_type {};
template <class R>
inline constexpr bool is_jet_v = is_jet<R>::value;

inline double zero_like(double) { return 0.0; }
inline Complex zero_like(const Complex&) { return Complex{}; }
template <class T>
Jet<T> zero_like(const Jet<T>& j) {
  return Jet<T>(j.table_ptr());
}

inline double one_like(double) { return 1.0; }
inline Complex one_like(const Complex&) { return Complex{1.0, 0.0}; }
template <class T>
Jet<T> one_like(const Jet<T>& j) {
  return Jet<T>::constant(j.table_ptr(), T{1});
}

inline double conjugate(double x) { return x; }
inline Complex conjugate(const Complex& z) { return std::conj(z); }
template <class T>
Jet<T> conjugate(const Jet<T>& j) {
  return j.conj();
}

inline double constant_part(double x) { return x; }
inline Complex constant_part(const Complex& z) { return z; }
template <class T>
T constant_part(const Jet<T>& j) {
  return j.constant_term();
}

inline double reciprocal(double x) {
  if (x == 0.0) throw SingularPointError("division by zero");
  return 1.0 / x;
}
inline Complex reciprocal(const Complex& z) {
  if (z == Complex{}) throw SingularPointError("division by zero");
  return 1.0 / z;
}
template <class T>
Jet<T> reciprocal(const Jet<T>& j) {
  return inverse(j);
}

// acc += a * b
inline void multiply_add(double& acc, double a, double b) { acc += a * b; }
inline void multiply_add(Complex& acc, const Complex& a, const Complex& b) { acc += a * b; }
template <class T>
void multiply_add(Jet<T>& acc, const Jet<T>& a, const Jet<T>& b) {
  acc.add_product(a, b);
}

// acc += c * a for a constant coefficient c.
inline void scale_add(double& acc, double c, double a) { acc += c * a; }
inline void scale_add(Complex& acc, double c, const Complex& a) { acc += c * a; }
inline void scale_add(Complex& acc, const Complex& c, const Complex& a) { acc += c * a; }
template <class T, class C>
void scale_add(Jet<T>& acc, const C& c, const Jet<T>& a) {
  acc.add_scaled(T(c), a);
}

// Complex version of a real-ring element.
template <class R>
struct complexify;
template <>
struct complexify<double> {
  using type = Complex;
};
template <>
struct complexify<Complex> {
  using type = Complex;
};
template <>
struct complexify<Jet<double>> {
  using type = Jet<Complex>;
};
template <>
struct complexify<Jet<Complex>> {
  using type = Jet<Complex>;
};
template <class R>
using complexify_t = typename complexify<R>::type;

inline Complex to_complex(double x) { return Complex{x, 0.0}; }
inline Complex to_complex(const Complex& z) { return z; }
inline Jet<Complex> to_complex(const Jet<Complex>& j) { return j; }
inline Jet<Complex> to_complex(const Jet<double>& j) {
  if (j.empty()) return {};
  Jet<Complex> out(j.table_ptr());
  const auto src = j.coefficients();
  for (std::size_t k = 0; k < src.size(); ++k) out[k] = src[k];
  return out;
}

inline bool is_finite(double x) { return std::isfinite(x); }
inline bool is_finite(const Complex& z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

}  // namespace dcinv
