#include "dcinv/combinatorics.hpp"

#include <algorithm>
#include <string>

#include "dcinv/errors.hpp"

namespace dcinv {

std::int64_t binomial(int n, int k) {
  if (n < 0) {
    throw DomainError("binomial: negative top argument " + std::to_string(n));
  }
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::int64_t result = 1;
  for (int i = 0; i < k; ++i) {
    // Exact at every step: result * (n - i) is divisible by (i + 1).
    result = result * (n - i) / (i + 1);
  }
  return result;
}

std::int64_t alternating_binomial_sum(int n, int m) {
  if (n < 0 || m < 0 || m > n) {
    throw DomainError("alternating_binomial_sum: need 0 <= m <= n, got n=" +
                      std::to_string(n) + " m=" + std::to_string(m));
  }
  std::int64_t sum = 0;
  for (int i = 0; i <= m; ++i) {
    const std::int64_t term = binomial(n, m - i);
    sum += (i % 2 == 0) ? term : -term;
  }
  return sum;
}

namespace {

void check_real_degree(int n, int m) {
  if (n < 2 || m < 1 || m > n - 1) {
    throw DomainError("real trace constants: need n >= 2 and 1 <= m <= n-1, got n=" +
                      std::to_string(n) + " m=" + std::to_string(m));
  }
}

void check_complex_degree(int n, int p, int q) {
  if (p < 0 || q < 1 || p + q != n) {
    throw DomainError("complex trace constants: need p >= 0, q >= 1, p + q == n, got n=" +
                      std::to_string(n) + " p=" + std::to_string(p) +
                      " q=" + std::to_string(q));
  }
}

}  // namespace

BilinearCoeffs real_bilinear_coeffs(int n, int m) {
  check_real_degree(n, m);
  BilinearCoeffs c{1, 0};
  for (int k = 1; k < m; ++k) {
    const std::int64_t shift = 2 * alternating_binomial_sum(n, k) - binomial(n, k);
    c = BilinearCoeffs{c.direct + shift, c.cross};
  }
  return c;
}

BilinearCoeffs complex_bilinear_coeffs(int n, int p, int q) {
  check_complex_degree(n, p, q);
  const std::int64_t holo = binomial(n, p);
  BilinearCoeffs c{holo, 0};
  for (int k = 1; k < q; ++k) {
    const std::int64_t shift =
        holo * (2 * alternating_binomial_sum(n, k) - binomial(n, k));
    c = BilinearCoeffs{c.direct + shift, c.cross};
  }
  return c;
}

TraceConstants real_trace_constants(int n, int m) {
  check_real_degree(n, m);
  const std::int64_t b =
      binomial(n - 2, m - 2) + binomial(n - 2, m) - 2 * binomial(n - 2, m - 1);
  return TraceConstants{binomial(n, m) - b, b};
}

TraceConstants real_trace_constants_by_recursion(int n, int m) {
  const BilinearCoeffs c = real_bilinear_coeffs(n, m);
  return TraceConstants{
      4 * c.cross,
      4 * c.direct - 4 * alternating_binomial_sum(n, m - 1) + binomial(n, m)};
}

TraceConstants complex_trace_constants(int n, int p, int q) {
  check_complex_degree(n, p, q);
  const std::int64_t holo = binomial(n, p);
  if (q == 1) {
    return TraceConstants{holo, holo * binomial(n, 1) - 4 * holo};
  }
  if (q == 2) {
    const std::int64_t a1 = alternating_binomial_sum(n, 1);
    return TraceConstants{2 * holo * a1 - holo * binomial(n, 1),
                          4 * holo + holo * binomial(n, 2) - 4 * holo * a1};
  }
  return complex_trace_constants_by_recursion(n, p, q);
}

TraceConstants complex_trace_constants_by_recursion(int n, int p, int q) {
  const BilinearCoeffs c = complex_bilinear_coeffs(n, p, q);
  const std::int64_t holo = binomial(n, p);
  return TraceConstants{
      c.cross, 4 * c.direct + holo * binomial(n, q) -
                   4 * holo * alternating_binomial_sum(n, q - 1)};
}

}  // namespace dcinv
