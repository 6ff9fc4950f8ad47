#pragma once

#include <cstdint>

namespace dcinv {

// C(n, k), zero for k < 0 or k > n. Throws DomainError for n < 0.
std::int64_t binomial(int n, int k);

// A(n, m) = sum_{i=0}^{m} (-1)^i C(n, m - i). Equals C(n - 1, m) for n >= 1.
std::int64_t alternating_binomial_sum(int n, int m);

// psi(xi, eta) = a * (cross-term ratio) + b for the product of two
// middle-degree symbols.
struct TraceConstants {
  std::int64_t a = 0;
  std::int64_t b = 0;

  friend bool operator==(const TraceConstants&, const TraceConstants&) = default;
};

// Weights of the two bilinear pairings that appear while peeling one factor
// off a wedge monomial: `cross` multiplies <eta_a, xi_b>_1 <xi_a, eta_b>_2 and
// `direct` multiplies <xi_a, xi_b>_1 <eta_a, eta_b>_2.
struct BilinearCoeffs {
  std::int64_t cross = 0;
  std::int64_t direct = 0;

  friend bool operator==(const BilinearCoeffs&, const BilinearCoeffs&) = default;
};

// Coefficients after m steps of the degree recursion on Lambda^m(R^n).
BilinearCoeffs real_bilinear_coeffs(int n, int m);

// Coefficients after q steps of the antiholomorphic-degree recursion on
// Lambda^{p,q}(C^n), p + q = n.
BilinearCoeffs complex_bilinear_coeffs(int n, int p, int q);

// Closed form, requires n >= 2 and 1 <= m <= n - 1.
TraceConstants real_trace_constants(int n, int m);
// Same constants obtained from real_bilinear_coeffs.
TraceConstants real_trace_constants_by_recursion(int n, int m);

// Requires p + q == n, p >= 0, q >= 1. Closed forms for q = 1 and q = 2,
// recursion otherwise.
TraceConstants complex_trace_constants(int n, int p, int q);
TraceConstants complex_trace_constants_by_recursion(int n, int p, int q);

}  // namespace dcinv
