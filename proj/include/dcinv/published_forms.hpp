#pragma once

#include <cmath>
#include <numbers>

// Closed forms for the two-dimensional examples (g1 = I), transcribed as
// published. Several of them disagree with the engine; the verification
// suites compare against them and never use them as ground truth.
namespace dcinv::published {

inline constexpr double kPi = std::numbers::pi;

// Trace formula for g2 = diag(f, h), constant term as printed.
inline double diagonal_trace(double f, double h, double x1, double x2, double y1, double y2) {
  return 4.0 * (x1 * y1 + x2 * y2) * (f * x1 * y1 + h * x2 * y2) /
             ((x1 * x1 + x2 * x2) * (f * y1 * y1 + h * y2 * y2)) -
         3.0;
}

// Mixed second derivatives d_{xi_i} d_{eta_j} of the trace at xi = eta, |xi| = 1.
inline double diagonal_d11(double f, double h, double x1, double x2) {
  const double q = f * x1 * x1 + h * x2 * x2;
  return 1.0 - 2.0 * x1 * x1 + f * (1.0 + 2.0 * x1 * x1) / q - 2.0 * f * f * x1 * x1 / (q * q);
}
inline double diagonal_d12(double f, double h, double x1, double x2) {
  const double q = f * x1 * x1 + h * x2 * x2;
  return -2.0 * x1 * x2 + (f + h) * x1 * x2 / q - 2.0 * f * h * x1 * x2 / (q * q);
}
inline double diagonal_d21(double f, double h, double x1, double x2) { return diagonal_d12(f, h, x1, x2); }
inline double diagonal_d22(double f, double h, double x1, double x2) {
  const double q = f * x1 * x1 + h * x2 * x2;
  return 1.0 - 2.0 * x2 * x2 + h * (1.0 + 2.0 * x2 * x2) / q - 2.0 * h * h * x2 * x2 / (q * q);
}

// Circle integrals used for the diagonal case.
inline double integral_one_minus_two_cos2() { return 0.0; }
inline double integral_cos2_over_q(double f, double h) {
  return 2.0 * kPi / (f - h) - 2.0 * kPi * h / (std::sqrt(f * h) * (f - h));
}
inline double integral_one_over_q(double f, double h) { return 2.0 * kPi / std::sqrt(f * h); }
inline double integral_cos2_over_q2(double f, double h) { return 2.0 * kPi / (f * std::sqrt(f * h)); }

// Coefficient table for g2 = diag(f, h).
inline double diagonal_a11(double f, double h) {
  return 4.0 * kPi * std::sqrt(f) / (std::sqrt(f) + std::sqrt(h));
}
inline double diagonal_a22(double f, double h) {
  return 4.0 * kPi * std::sqrt(h) / (std::sqrt(f) + std::sqrt(h));
}

// g2 = [[f, h], [h, f]], f > h > 0.
inline double offdiagonal_atan(double f, double h) { return std::atan(std::sqrt((f - h) / (f + h))); }

// Trace formula for g2 = [[f, h], [h, f]], constant term as printed.
inline double offdiagonal_trace(double f, double h, double x1, double x2, double y1, double y2) {
  return 4.0 * (x1 * y1 + x2 * y2) * (f * x1 * y1 + f * x2 * y2 + h * x1 * y2 + h * x2 * y1) /
             ((x1 * x1 + x2 * x2) * (f * y1 * y1 + 2.0 * h * y1 * y2 + f * y2 * y2)) -
         3.0;
}

// Mixed second derivatives at xi = eta, |xi| = 1.
inline double offdiagonal_d11(double f, double h, double x1, double x2) {
  const double q = f + 2.0 * h * x1 * x2;
  const double l = f * x1 + h * x2;
  return 1.0 - 2.0 * x1 * x1 + (f * (1.0 + 2.0 * x1 * x1) + 2.0 * h * x1 * x2) / q - 2.0 * l * l / (q * q);
}
inline double offdiagonal_d12(double f, double h, double x1, double x2) {
  const double q = f + 2.0 * h * x1 * x2;
  const double l = f * h + (f * f + h * h) * x1 * x2;
  return -2.0 * x1 * x2 + (2.0 * f * x1 * x2 + 2.0 * h) / q - 2.0 * l * l / (q * q);
}
inline double offdiagonal_d21(double f, double h, double x1, double x2) { return offdiagonal_d12(f, h, x1, x2); }
inline double offdiagonal_d22(double f, double h, double x1, double x2) {
  const double q = f + 2.0 * h * x1 * x2;
  const double l = f * x2 + h * x1;
  return 1.0 - 2.0 * x2 * x2 + (f * (1.0 + 2.0 * x2 * x2) + 2.0 * h * x1 * x2) / q - 2.0 * l * l / (q * q);
}

// int_0^{2 pi} d theta / (sin 2 theta + f / h)
inline double integral_over_sin2_shift(double f, double h) {
  return 8.0 * h / std::sqrt(f * f - h * h) * offdiagonal_atan(f, h);
}
// int_0^{pi / 2} d theta / (sin theta + f / h)^2
inline double integral_over_sin_shift_squared(double f, double h) {
  const double s = f * f - h * h;
  return h * h * h / (f * s) + 2.0 * h * h * h / (s * std::sqrt(s)) * offdiagonal_atan(f, h);
}

inline double offdiagonal_a11(double f, double h) {
  const double r = std::sqrt((f - h) / (f + h));
  return 2.0 * kPi + 4.0 * h / f - 8.0 * r * offdiagonal_atan(f, h);
}
inline double offdiagonal_a12(double f, double h) {
  const double s = f * f - h * h;
  return 2.0 * f * kPi / h -
         (28.0 * h * h * h + 8.0 * f * f * f + 24.0 * h * h * f + 6.0 * h * f * f) / ((f + h) * s) +
         (24.0 * h * h * f - 8.0 * f * f * f - 8.0 * f * h * h - 8.0 * h * h * h) /
             (h * (f + h) * std::sqrt(s)) * offdiagonal_atan(f, h);
}
inline double offdiagonal_a21(double f, double h) { return offdiagonal_a12(f, h); }
inline double offdiagonal_a22(double f, double h) { return offdiagonal_a11(f, h); }

}  // namespace dcinv::published
