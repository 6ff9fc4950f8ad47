#include "dcinv/verification_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <random>
#include <set>
#include <type_traits>

#include <fmt/format.h>
#include <json.hpp>

#include "dcinv/combinatorics.hpp"
#include "dcinv/complex_forms.hpp"
#include "dcinv/exterior_real.hpp"
#include "dcinv/invariant_pipeline.hpp"
#include "dcinv/published_forms.hpp"
#include "dcinv/random_instances.hpp"
#include "dcinv/sphere_quadrature.hpp"
#include "dcinv/symbol_engine.hpp"

namespace dcinv {

const char* to_string(Provenance source) {
  switch (source) {
    case Provenance::kPaperFormula:
      return "paper-formula";
    case Provenance::kOracle:
      return "oracle";
    case Provenance::kCrossPipeline:
      return "cross-pipeline";
  }
  return "unknown";
}

const char* to_string(Verdict verdict) {
  switch (verdict) {
    case Verdict::kPass:
      return "pass";
    case Verdict::kFail:
      return "fail";
    case Verdict::kInformational:
      return "informational";
  }
  return "unknown";
}

std::size_t VerificationReport::count(Verdict verdict) const {
  return static_cast<std::size_t>(
      std::ranges::count_if(cases, [&](const VerificationCase& c) { return c.verdict == verdict; }));
}

std::vector<std::string> VerificationReport::discrepancies() const {
  std::set<std::string> ids;
  for (const auto& c : cases) {
    if (!c.discrepancy.empty()) ids.insert(c.discrepancy);
  }
  return {ids.begin(), ids.end()};
}

std::vector<CoverageEntry> VerificationReport::coverage() const {
  std::vector<CoverageEntry> out;
  std::map<std::string, std::size_t> slot;
  for (const auto& c : cases) {
    auto [it, fresh] = slot.emplace(c.formula, out.size());
    if (fresh) out.push_back({c.formula, 0});
    ++out[it->second].cases;
  }
  return out;
}

namespace {

constexpr double kPi = std::numbers::pi;

struct Check {
  std::string id;
  std::string formula;
  std::string description;
  Provenance source = Provenance::kOracle;
  Complex computed;
  Complex reference;
  double tolerance = 0.0;
  // Printed formulas that disagree become informational under this ID.
  std::string discrepancy_id;
};

void order_by_id(VerificationReport& report) {
  std::ranges::stable_sort(report.cases, {}, &VerificationCase::id);
}

void record(VerificationReport& report, Check c) {
  VerificationCase v;
  v.id = std::move(c.id);
  v.formula = std::move(c.formula);
  v.description = std::move(c.description);
  v.source = c.source;
  v.computed = c.computed;
  v.reference = c.reference;
  v.abs_error = std::abs(c.computed - c.reference);
  v.rel_error = v.abs_error / std::max(std::abs(c.reference), 1e-300);
  v.tolerance = c.tolerance;
  const bool ok = v.abs_error <= c.tolerance * std::max(1.0, std::abs(c.reference));
  if (ok) {
    v.verdict = Verdict::kPass;
  } else if (!c.discrepancy_id.empty()) {
    v.verdict = Verdict::kInformational;
    v.discrepancy = std::move(c.discrepancy_id);
  } else {
    v.verdict = Verdict::kFail;
  }
  report.cases.push_back(std::move(v));
}

// Keeps the instance with the largest scaled error.
struct Worst {
  Complex computed;
  Complex reference;
  double score = -1.0;

  void offer(Complex c, Complex r) {
    const double s = std::abs(c - r) / std::max(1.0, std::abs(r));
    if (s > score) {
      score = s;
      computed = c;
      reference = r;
    }
  }
};

template <class R>
double max_abs_entry(const OperatorMatrix<R>& m) {
  double out = 0.0;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) out = std::max(out, std::abs(m(r, c)));
  }
  return out;
}

template <class R>
OperatorMatrix<R> scaled_identity(std::size_t dim, R value) {
  OperatorMatrix<R> out(dim, dim, R{});
  for (std::size_t k = 0; k < dim; ++k) out(k, k) = value;
  return out;
}

DualMetric plane_metric(double g11, double g12, double g22) {
  Eigen::MatrixXd g(2, 2);
  g << g11, g12, g12, g22;
  return DualMetric(g);
}

// ---------------------------------------------------------------- traces

void real_trace_cases(VerificationReport& report, int max_n, int samples, InstanceSampler& rng) {
  for (int n = 2; n <= max_n; ++n) {
    for (int m = 1; m <= n - 1; ++m) {
      Worst worst;
      for (int s = 0; s < samples; ++s) {
        const RealSymbolContext ctx(n, m, DualMetric(rng.spd(n)), DualMetric(rng.spd(n)));
        const auto xi = rng.covector(n);
        const auto eta = rng.covector(n);
        worst.offer(psi_matrix<double>(ctx, xi, eta), psi_closed<double>(ctx, xi, eta));
      }
      const auto k = real_trace_constants(n, m);
      record(report, {fmt::format("traces/real/n{}-m{}/psi", n, m), "real trace closed form",
                      fmt::format("worst of {} random (g1, g2, xi, eta): dense trace vs a x + b, (a, b) = ({}, {})",
                                  samples, k.a, k.b),
                      Provenance::kOracle, worst.computed, worst.reference, 1e-10, ""});

      // xi = eta: the cross ratio is 1, so the trace is the dimension.
      const RealSymbolContext id(n, m, DualMetric::identity(n), DualMetric::identity(n));
      std::vector<double> e(static_cast<std::size_t>(n), 0.0);
      e[0] = 1.0;
      record(report, {fmt::format("traces/real/n{}-m{}/coincident", n, m), "real trace constants",
                      "dense trace at xi = eta = e1 vs a + b = C(n, m)", Provenance::kOracle,
                      psi_matrix<double>(id, e, e), static_cast<double>(k.a + k.b), 1e-12, ""});

      const auto rec = real_trace_constants_by_recursion(n, m);
      record(report, {fmt::format("traces/real/n{}-m{}/recursion", n, m), "degree recursion for the trace constants",
                      "b from the bilinear recursion vs the binomial closed form", Provenance::kOracle,
                      static_cast<double>(rec.b), static_cast<double>(k.b), 0.0, ""});
      record(report, {fmt::format("traces/real/n{}-m{}/recursion-a", n, m), "degree recursion for the trace constants",
                      "a from the bilinear recursion vs the binomial closed form", Provenance::kOracle,
                      static_cast<double>(rec.a), static_cast<double>(k.a), 0.0, ""});
    }
    // Orthogonal xi, eta with g = I: the trace is the constant b alone.
    const RealSymbolContext id(n, 1, DualMetric::identity(n), DualMetric::identity(n));
    std::vector<double> e1(static_cast<std::size_t>(n), 0.0);
    std::vector<double> e2 = e1;
    e1[0] = 1.0;
    e2[1] = 1.0;
    const double brute = psi_matrix<double>(id, e1, e2);
    record(report, {fmt::format("traces/real/n{}-m1/orthogonal", n), "real trace constants, one-forms",
                    "dense trace at xi = e1, eta = e2, g = I vs b = n - 4", Provenance::kOracle, brute,
                    static_cast<double>(n - 4), 1e-12, ""});
    record(report, {fmt::format("traces/real/n{}-m1/printed-constant", n), "real trace constants, one-forms",
                    "dense trace at xi = e1, eta = e2, g = I vs the printed constant -3 C(n, 0)",
                    Provenance::kPaperFormula, brute, -3.0, 1e-12, "DISCREPANCY-EQ-3.9"});
  }
}

void real_identity_cases(VerificationReport& report, int max_n, InstanceSampler& rng) {
  const int instances = 200;
  std::map<int, Worst> trace_worst;
  std::map<int, Worst> anti_worst;
  for (int trial = 0; trial < instances; ++trial) {
    const int n = 2 + trial % (max_n - 1);
    const int m = (trial / (max_n - 1)) % (n + 1);
    const DualMetric g(rng.spd(n));
    const auto xi = rng.covector(n);
    const auto eta = rng.covector(n);
    const double ip = g.inner<double>(xi, eta);
    // Cauchy-Schwarz bound on ip, the size of the individual terms.
    const double bound = std::sqrt(g.inner<double>(xi, xi) * g.inner<double>(eta, eta));
    if (m < n) {
      const double tr = trace(interior_matrix<double>(n, m + 1, g, eta) * wedge_matrix<double>(n, m, xi));
      const double count = static_cast<double>(alternating_binomial_sum(n, m));
      const double scale = std::max(1.0, bound * count);
      trace_worst[n].offer(tr / scale, ip * count / scale);
    }
    const std::size_t dim = basis_dimension(n, m);
    OperatorMatrix<double> anti(dim, dim, 0.0);
    if (m >= 1) anti += wedge_matrix<double>(n, m - 1, xi) * interior_matrix<double>(n, m, g, eta);
    if (m + 1 <= n) anti += interior_matrix<double>(n, m + 1, g, eta) * wedge_matrix<double>(n, m, xi);
    anti_worst[n].offer(max_abs_entry(anti - scaled_identity(dim, ip)) / std::max(1.0, bound), 0.0);
  }
  for (const auto& [n, w] : trace_worst) {
    record(report, {fmt::format("traces/real/n{}/trace-identity", n), "trace identity on real forms",
                    "worst tr(iota(eta) eps(xi)) vs <xi, eta>_g A(n, m), both over max(1, |xi|_g |eta|_g A(n, m))",
                    Provenance::kPaperFormula, w.computed, w.reference, 1e-12, ""});
  }
  for (const auto& [n, w] : anti_worst) {
    record(report, {fmt::format("traces/real/n{}/anticommutator", n), "anticommutator identity on real forms",
                    "worst max |eps iota + iota eps - <xi, eta>_g Id| / max(1, |xi|_g |eta|_g)",
                    Provenance::kPaperFormula, w.computed, w.reference, 1e-12, ""});
  }
  for (int n = 1; n <= 12; ++n) {
    for (int m = 0; m <= n; ++m) {
      record(report, {fmt::format("traces/alternating-sum/n{}-m{}", n, m), "alternating binomial sum",
                      "sum_i (-1)^i C(n, m - i) vs C(n - 1, m), exact", Provenance::kPaperFormula,
                      static_cast<double>(alternating_binomial_sum(n, m)), static_cast<double>(binomial(n - 1, m)),
                      0.0, ""});
    }
  }
}

void complex_trace_cases(VerificationReport& report, int max_n, int samples, InstanceSampler& rng) {
  const int top = std::min(3, std::max(1, max_n / 2));
  for (int n = 1; n <= top; ++n) {
    for (int q = 1; q <= n; ++q) {
      const int p = n - q;
      Worst worst;
      for (int s = 0; s < samples; ++s) {
        const ComplexSymbolContext ctx(n, p, q, JInvariantMetric(rng.j_invariant(n)),
                                       JInvariantMetric(rng.j_invariant(n)));
        const auto xi = rng.covector(2 * n);
        const auto eta = rng.covector(2 * n);
        worst.offer(psi_matrix<double>(ctx, xi, eta), psi_closed<double>(ctx, xi, eta));
      }
      const auto k = complex_trace_constants(n, p, q);
      record(report, {fmt::format("traces/complex/n{}-p{}-q{}/psi", n, p, q), "complex trace closed form",
                      fmt::format("worst of {} random J-invariant pairs: dense trace vs a x + b, (a, b) = ({}, {})",
                                  samples, k.a, k.b),
                      Provenance::kOracle, worst.computed, worst.reference, 1e-10, ""});
      const auto rec = complex_trace_constants_by_recursion(n, p, q);
      record(report, {fmt::format("traces/complex/n{}-p{}-q{}/recursion", n, p, q),
                      "antiholomorphic recursion for the trace constants",
                      "b from the bilinear recursion vs the closed form", Provenance::kOracle,
                      static_cast<double>(rec.b), static_cast<double>(k.b), 0.0, ""});
      record(report, {fmt::format("traces/complex/n{}-p{}-q{}/balance", n, p, q), "complex trace constants",
                      "4a + b vs C(n, p) C(n, q)", Provenance::kOracle, static_cast<double>(4 * k.a + k.b),
                      static_cast<double>(binomial(n, p) * binomial(n, q)), 0.0, ""});
    }
  }
  const int instances = 200;
  std::map<int, Worst> trace_worst;
  std::map<int, Worst> anti_worst;
  for (int trial = 0; trial < instances; ++trial) {
    const int n = 1 + trial % top;
    const int p = (trial / top) % (n + 1);
    const int q = (trial / (top * (n + 1))) % (n + 1);
    const JInvariantMetric g(rng.j_invariant(n));
    const auto x = hat<double>(std::span<const double>(rng.covector(2 * n)));
    const auto y = hat<double>(std::span<const double>(rng.covector(2 * n)));
    const Complex ip = hermitian_inner(g, x, y);
    const double bound = std::sqrt(std::abs(hermitian_inner(g, x, x)) * std::abs(hermitian_inner(g, y, y)));
    if (q < n) {
      const Complex tr = trace(iota_antiholo(n, p, q + 1, g, y) * eps_antiholo(n, p, q, x));
      const double count = static_cast<double>(binomial(n, p) * alternating_binomial_sum(n, q));
      const double scale = std::max(1.0, bound * count);
      trace_worst[n].offer(tr / scale, ip * count / scale);
    }
    const std::size_t dim = biform_dimension(n, p, q);
    OperatorMatrix<Complex> anti(dim, dim, Complex{});
    if (q >= 1) anti += eps_antiholo(n, p, q - 1, x) * iota_antiholo(n, p, q, g, y);
    if (q + 1 <= n) anti += iota_antiholo(n, p, q + 1, g, y) * eps_antiholo(n, p, q, x);
    anti_worst[n].offer(max_abs_entry(anti - scaled_identity(dim, ip)) / std::max(1.0, bound), 0.0);
  }
  for (const auto& [n, w] : trace_worst) {
    record(report, {fmt::format("traces/complex/n{}/trace-identity", n), "trace identity on (p, q)-forms",
                    "worst tr(iota(y) eps(x)) vs <x, y>_g C(n, p) A(n, q), both over max(1, |x|_g |y|_g C(n, p) A(n, q))",
                    Provenance::kPaperFormula, w.computed, w.reference, 1e-12, ""});
  }
  for (const auto& [n, w] : anti_worst) {
    record(report, {fmt::format("traces/complex/n{}/anticommutator", n), "anticommutator identity on (p, q)-forms",
                    "worst max |eps iota + iota eps - <x, y>_g Id| / max(1, |x|_g |y|_g)",
                    Provenance::kPaperFormula, w.computed, w.reference, 1e-12, ""});
  }
}

// ------------------------------------------------------------------ jets

// Central difference of f along coordinates i (first slot) and j (second).
template <class F>
double mixed_difference(const F& f, std::vector<double> x, std::vector<double> y, int i, int j, double step) {
  double acc = 0.0;
  const double xi0 = x[static_cast<std::size_t>(i)];
  const double yj0 = y[static_cast<std::size_t>(j)];
  for (int si = -1; si <= 1; si += 2) {
    for (int sj = -1; sj <= 1; sj += 2) {
      x[static_cast<std::size_t>(i)] = xi0 + si * step;
      y[static_cast<std::size_t>(j)] = yj0 + sj * step;
      acc += si * sj * f(x, y);
    }
  }
  return acc / (4.0 * step * step);
}

struct PlaneDerivative {
  const char* label;
  int i;
  int j;
  double (*printed)(double, double, double, double);
  const char* discrepancy;
};

void printed_derivative_cases(VerificationReport& report, const char* family, const DualMetric& g2, double f,
                              double h, const std::vector<PlaneDerivative>& parts,
                              double (*printed_trace)(double, double, double, double, double, double)) {
  const RealSymbolContext ctx(2, 1, DualMetric::identity(2), g2);
  for (double theta : {0.3, 1.1, 2.0}) {
    const std::vector<double> xi = {std::cos(theta), std::sin(theta)};
    const auto jet = mixed_taylor_jet(ctx, xi);
    for (const auto& part : parts) {
      MultiIndex slot(4, 0);
      slot[static_cast<std::size_t>(part.i)] = 1;
      slot[static_cast<std::size_t>(2 + part.j)] = 1;
      const double value = jet.coefficient(slot);
      const std::string where = fmt::format("{}/f{}-h{}/theta{}/{}", family, f, h, theta, part.label);
      record(report, {fmt::format("jets/{}/printed", where), fmt::format("{} integrand derivatives", family),
                      fmt::format("jet coefficient u{} v{} vs the printed derivative", part.i + 1, part.j + 1),
                      Provenance::kPaperFormula, value, part.printed(f, h, xi[0], xi[1]), 1e-10,
                      part.discrepancy});
      const auto printed = [&](const std::vector<double>& x, const std::vector<double>& y) {
        return printed_trace(f, h, x[0], x[1], y[0], y[1]);
      };
      record(report, {fmt::format("jets/{}/printed-trace-difference", where),
                      fmt::format("{} trace formula", family),
                      "jet coefficient vs central difference (step 1e-4) of the printed trace formula",
                      Provenance::kOracle, value, mixed_difference(printed, xi, xi, part.i, part.j, 1e-4), 1e-6,
                      ""});
    }
  }
}

// Jet of psi(xi + u, eta + v) with cap 2, from the dense symbols.
template <class Context>
auto low_order_jet(const Context& ctx, const std::vector<double>& xi, const std::vector<double>& eta) {
  const int d = static_cast<int>(xi.size());
  const auto table = MonomialTable::get(2 * d, 2);
  std::vector<Jet<double>> x;
  std::vector<Jet<double>> y;
  for (int k = 0; k < d; ++k) {
    x.push_back(Jet<double>::variable(table, k, xi[static_cast<std::size_t>(k)]));
    y.push_back(Jet<double>::variable(table, d + k, eta[static_cast<std::size_t>(k)]));
  }
  return psi_matrix<Jet<double>>(ctx, std::span<const Jet<double>>(x), std::span<const Jet<double>>(y));
}

template <class Context>
void finite_difference_case(VerificationReport& report, const std::string& id, const Context& ctx, int d,
                            InstanceSampler& rng) {
  const auto xi = rng.covector(d);
  const auto eta = rng.covector(d);
  const auto jet = low_order_jet(ctx, xi, eta);
  const auto value = [&](const std::vector<double>& x, const std::vector<double>& y) {
    return psi_matrix<double>(ctx, x, y);
  };
  using Value = decltype(value(xi, eta));
  Worst worst;
  double scale = 1.0;
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      MultiIndex slot(static_cast<std::size_t>(2 * d), 0);
      slot[static_cast<std::size_t>(i)] = 1;
      slot[static_cast<std::size_t>(d + j)] = 1;
      const Value coefficient = jet.coefficient(slot);
      scale = std::max(scale, std::abs(coefficient));
      Value fd{};
      if constexpr (std::is_same_v<Value, double>) {
        fd = mixed_difference(value, xi, eta, i, j, 1e-4);
      } else {
        fd = Complex(mixed_difference([&](auto& a, auto& b) { return value(a, b).real(); }, xi, eta, i, j, 1e-4),
                     mixed_difference([&](auto& a, auto& b) { return value(a, b).imag(); }, xi, eta, i, j, 1e-4));
      }
      worst.offer(Complex(coefficient) / scale, Complex(fd) / scale);
    }
    // First order in xi.
    std::vector<double> plus = xi;
    std::vector<double> minus = xi;
    plus[static_cast<std::size_t>(i)] += 1e-4;
    minus[static_cast<std::size_t>(i)] -= 1e-4;
    MultiIndex slot(static_cast<std::size_t>(2 * d), 0);
    slot[static_cast<std::size_t>(i)] = 1;
    const Complex fd = (Complex(value(plus, eta)) - Complex(value(minus, eta))) / 2e-4;
    worst.offer(Complex(jet.coefficient(slot)) / scale, fd / scale);
  }
  record(report, {id, "jet arithmetic on the trace",
                  "worst first and mixed second jet coefficient vs central differences (step 1e-4), "
                  "scaled by the largest coefficient",
                  Provenance::kOracle, worst.computed, worst.reference, 1e-6, ""});
}

// Slots of T' at xi = eta from the trace pairing vs T' of the dense-symbol
// jet and of the closed-form jet.
template <class Context>
void high_order_case(VerificationReport& report, const std::string& id, const Context& ctx, int d,
                     InstanceSampler& rng) {
  const auto xi = rng.covector(d);
  const auto pairing = mixed_taylor_jet(ctx, xi);
  const auto table = MonomialTable::get(2 * d, d);
  std::vector<Jet<double>> x;
  std::vector<Jet<double>> y;
  for (int k = 0; k < d; ++k) {
    x.push_back(Jet<double>::variable(table, k, xi[static_cast<std::size_t>(k)]));
    y.push_back(Jet<double>::variable(table, d + k, xi[static_cast<std::size_t>(k)]));
  }
  const std::span<const Jet<double>> xs(x);
  const std::span<const Jet<double>> ys(y);
  const auto dense = t_prime(psi_matrix<Jet<double>>(ctx, xs, ys), d);
  const auto closed = t_prime(psi_closed<Jet<double>>(ctx, xs, ys), d);
  Worst vs_dense;
  Worst vs_closed;
  double scale = 1.0;
  for (const auto& c : pairing.coefficients()) scale = std::max(scale, std::abs(c));
  for (std::size_t k = 0; k < table->size(); ++k) {
    const Complex mine = pairing.coefficient(table->exponent(k));
    vs_dense.offer(mine / scale, Complex(dense[k]) / scale);
    vs_closed.offer(mine / scale, Complex(closed[k]) / scale);
  }
  record(report, {id + "/dense", "T' restriction of the trace jet",
                  "trace-pairing slots vs T' of the dense-symbol jet, scaled", Provenance::kCrossPipeline,
                  vs_dense.computed, vs_dense.reference, 1e-10, ""});
  record(report, {id + "/closed", "T' restriction of the trace jet",
                  "trace-pairing slots vs T' of the closed-form jet, scaled", Provenance::kCrossPipeline,
                  vs_closed.computed, vs_closed.reference, 1e-10, ""});
}

// ------------------------------------------------------------ quadrature

template <class F>
double circle_integral(const F& f, int nodes = 512) {
  return integrate([&](std::span<const double> x) { return f(std::atan2(x[1], x[0])); }, circle_rule(nodes));
}

template <class F>
double interval_integral(const F& f, double lo, double hi, int count = 96) {
  std::vector<double> t;
  std::vector<double> w;
  gauss_legendre(count, t, w);
  double sum = 0.0;
  for (std::size_t k = 0; k < t.size(); ++k) sum += w[k] * f(0.5 * (hi - lo) * t[k] + 0.5 * (hi + lo));
  return 0.5 * (hi - lo) * sum;
}

void diagonal_integral_cases(VerificationReport& report) {
  const std::vector<std::pair<double, double>> grid = {{4.0, 1.0}, {2.0, 0.5}, {9.0, 4.0}, {3.0, 1.0}, {5.0, 2.0}};
  for (const auto& [f, h] : grid) {
    const auto q = [f = f, h = h](double t) { return f * std::cos(t) * std::cos(t) + h * std::sin(t) * std::sin(t); };
    const std::string at = fmt::format("quadrature/diagonal/f{}-h{}", f, h);
    record(report, {at + "/one-minus-two-cos2", "diagonal-plane angular integrals", "int (1 - 2 cos^2)",
                    Provenance::kPaperFormula,
                    circle_integral([](double t) { return 1.0 - 2.0 * std::cos(t) * std::cos(t); }),
                    published::integral_one_minus_two_cos2(), 1e-10, ""});
    record(report, {at + "/cos2-over-q", "diagonal-plane angular integrals", "int cos^2 / q",
                    Provenance::kPaperFormula,
                    circle_integral([&](double t) { return std::cos(t) * std::cos(t) / q(t); }),
                    published::integral_cos2_over_q(f, h), 1e-10, ""});
    record(report, {at + "/one-over-q", "diagonal-plane angular integrals", "int 1 / q", Provenance::kPaperFormula,
                    circle_integral([&](double t) { return 1.0 / q(t); }), published::integral_one_over_q(f, h),
                    1e-10, ""});
    const double cos2_q2 = circle_integral([&](double t) { return std::cos(t) * std::cos(t) / (q(t) * q(t)); });
    record(report, {at + "/cos2-over-q2", "diagonal-plane angular integrals", "int cos^2 / q^2 vs the printed value",
                    Provenance::kPaperFormula, cos2_q2, published::integral_cos2_over_q2(f, h), 1e-10,
                    "DISCREPANCY-EQ-4.11"});
    record(report, {at + "/cos2-over-q2-derivative", "diagonal-plane angular integrals",
                    "int cos^2 / q^2 vs -d/df of int 1 / q = pi / (f sqrt(fh))", Provenance::kOracle, cos2_q2,
                    kPi / (f * std::sqrt(f * h)), 1e-10, ""});
    const double a1 = circle_integral([&](double t) {
      return published::diagonal_d11(f, h, std::cos(t), std::sin(t));
    });
    record(report, {at + "/printed-integrand", "diagonal-plane coefficient closed form",
                    "int of the printed d11 integrand vs the printed coefficient", Provenance::kPaperFormula, a1,
                    published::diagonal_a11(f, h), 1e-10, "DISCREPANCY-EQ-4.9"});
  }
}

void offdiagonal_integral_cases(VerificationReport& report) {
  for (const auto& [f, h] : std::vector<std::pair<double, double>>{{2.0, 1.0}, {3.0, 1.0}, {5.0, 4.0}}) {
    const std::string at = fmt::format("quadrature/offdiagonal/f{}-h{}", f, h);
    const double sin2 = circle_integral([f = f, h = h](double t) { return 1.0 / (std::sin(2.0 * t) + f / h); });
    record(report, {at + "/sin2-shift", "off-diagonal angular integrals", "int_0^{2 pi} 1 / (sin 2t + f / h)",
                    Provenance::kPaperFormula, sin2, published::integral_over_sin2_shift(f, h), 1e-10,
                    "DISCREPANCY-EQ-4.21"});
    const double r = f / h;
    record(report, {at + "/sin2-shift-exact", "off-diagonal angular integrals",
                    "int_0^{2 pi} 1 / (sin 2t + r) vs 2 pi / sqrt(r^2 - 1)", Provenance::kOracle, sin2,
                    2.0 * kPi / std::sqrt(r * r - 1.0), 1e-10, ""});
    const double squared = interval_integral(
        [r](double t) { return 1.0 / ((std::sin(t) + r) * (std::sin(t) + r)); }, 0.0, kPi / 2.0);
    record(report, {at + "/sin-shift-squared", "off-diagonal angular integrals",
                    "int_0^{pi/2} 1 / (sin t + f / h)^2, Gauss-Legendre", Provenance::kPaperFormula, squared,
                    published::integral_over_sin_shift_squared(f, h), 1e-10, "DISCREPANCY-EQ-4.22"});
    const struct {
      const char* label;
      double (*integrand)(double, double, double, double);
      double (*printed)(double, double);
      const char* id;
    } parts[] = {{"b11", published::offdiagonal_d11, published::offdiagonal_a11, "DISCREPANCY-EQ-4.23"},
                 {"b12", published::offdiagonal_d12, published::offdiagonal_a12, "DISCREPANCY-EQ-4.24"},
                 {"b22", published::offdiagonal_d22, published::offdiagonal_a22, "DISCREPANCY-EQ-4.25"}};
    for (const auto& part : parts) {
      const double value = circle_integral([&, f = f, h = h](double t) {
        return part.integrand(f, h, std::cos(t), std::sin(t));
      });
      record(report, {at + "/" + part.label, "off-diagonal coefficient closed forms",
                      "int of the printed integrand vs the printed coefficient", Provenance::kPaperFormula, value,
                      part.printed(f, h), 1e-10, part.id});
    }
  }
}

void rule_sanity_cases(VerificationReport& report) {
  for (int d : {2, 3, 4, 5}) {
    const QuadratureRule rule = d == 2 ? circle_rule(64) : sphere_rule(d, 16);
    record(report, {fmt::format("quadrature/area/d{}", d), "sphere area", "total weight vs 2 pi^{d/2} / Gamma(d/2)",
                    Provenance::kOracle, rule.total_weight(), sphere_area(d), 1e-12, ""});
  }
}

void monte_carlo_cases(VerificationReport& report, InstanceSampler& rng) {
  const int draws = 1000000;
  for (int k = 0; k < 10; ++k) {
    const int d = 3 + k % 2;
    Eigen::VectorXd w(d);
    for (int i = 0; i < d; ++i) w(i) = 0.7 * rng.normal();
    const Eigen::MatrixXd a = rng.spd_in_range(d, 0.5, 2.0);
    const bool rational = k % 3 == 2;
    const auto f = [&](std::span<const double> x) {
      const Eigen::Map<const Eigen::VectorXd> v(x.data(), d);
      return rational ? 1.0 / v.dot(a * v) : std::exp(w.dot(v));
    };
    const double rule_value = integrate(f, sphere_rule(d, 24));
    double sum = 0.0;
    double sum_sq = 0.0;
    std::vector<double> x(static_cast<std::size_t>(d));
    for (int s = 0; s < draws; ++s) {
      double norm = 0.0;
      for (auto& xi : x) {
        xi = rng.normal();
        norm += xi * xi;
      }
      norm = std::sqrt(norm);
      for (auto& xi : x) xi /= norm;
      const double v = f(x);
      sum += v;
      sum_sq += v * v;
    }
    const double area = sphere_area(d);
    const double mean = sum / draws;
    const double sigma = area * std::sqrt(std::max(0.0, sum_sq / draws - mean * mean) / draws);
    const double mc = area * mean;
    VerificationCase c;
    c.id = fmt::format("quadrature/monte-carlo/{}", k);
    c.formula = "Monte Carlo cross-check of the sphere rule";
    c.description = fmt::format("{} on S^{}: rule value vs 10^6 uniform samples, pass within 4 sigma (sigma = {:.3e})",
                                rational ? "1 / <x, A x>" : "exp(<w, x>)", d - 1, sigma);
    c.source = Provenance::kOracle;
    c.computed = rule_value;
    c.reference = mc;
    c.abs_error = std::abs(rule_value - mc);
    c.rel_error = c.abs_error / std::abs(mc);
    c.tolerance = 4.0 * sigma / std::max(1.0, std::abs(mc));
    c.verdict = c.abs_error <= 4.0 * sigma ? Verdict::kPass : Verdict::kFail;
    report.cases.push_back(std::move(c));
  }
}

// -------------------------------------------------------------- pipeline

// int_{|xi|=1} d_{xi_i} d_{eta_j} psi |_{eta = xi}: central differences of
// the dense trace on a trapezoid rule.
double plane_difference_oracle(const RealSymbolContext& ctx, int i, int j) {
  const int nodes = 256;
  double sum = 0.0;
  for (int k = 0; k < nodes; ++k) {
    const double t = 2.0 * kPi * k / nodes;
    const std::vector<double> x = {std::cos(t), std::sin(t)};
    sum += mixed_difference([&](const auto& a, const auto& b) { return psi_matrix<double>(ctx, a, b); }, x, x, i, j,
                            1e-4);
  }
  return sum * 2.0 * kPi / nodes;
}

const MultiIndex kE1 = {1, 0};
const MultiIndex kE2 = {0, 1};

void plane_table_cases(VerificationReport& report) {
  const DualMetric id = DualMetric::identity(2);
  for (const auto& [f, h] : std::vector<std::pair<double, double>>{{4.0, 1.0}, {2.0, 0.5}, {9.0, 4.0}}) {
    const DualMetric g2 = plane_metric(f, 0.0, h);
    const auto t = omega_real(2, id, g2);
    const RealSymbolContext ctx(2, 1, id, g2);
    const std::string at = fmt::format("pipeline/diagonal/f{}-h{}", f, h);
    record(report, {at + "/a11-oracle", "diagonal-plane coefficient table",
                    "A(1,0),(1,0) vs integrated central differences of the dense trace", Provenance::kOracle,
                    t.at(kE1, kE1), plane_difference_oracle(ctx, 0, 0), 1e-6, ""});
    record(report, {at + "/a22-oracle", "diagonal-plane coefficient table",
                    "A(0,1),(0,1) vs integrated central differences of the dense trace", Provenance::kOracle,
                    t.at(kE2, kE2), plane_difference_oracle(ctx, 1, 1), 1e-6, ""});
    record(report, {at + "/a11-printed", "diagonal-plane coefficient table", "A(1,0),(1,0) vs 4 pi sqrt f / (sqrt f + sqrt h)",
                    Provenance::kPaperFormula, t.at(kE1, kE1), published::diagonal_a11(f, h), 1e-8,
                    "DISCREPANCY-EQ-4.12"});
    record(report, {at + "/a22-printed", "diagonal-plane coefficient table", "A(0,1),(0,1) vs 4 pi sqrt h / (sqrt f + sqrt h)",
                    Provenance::kPaperFormula, t.at(kE2, kE2), published::diagonal_a22(f, h), 1e-8,
                    "DISCREPANCY-EQ-4.12"});
    record(report, {at + "/a12-zero", "diagonal-plane coefficient table", "A(1,0),(0,1) vanishes",
                    Provenance::kPaperFormula, t.at(kE1, kE2), 0.0, 1e-10, ""});
    record(report, {at + "/a21-zero", "diagonal-plane coefficient table", "A(0,1),(1,0) vanishes",
                    Provenance::kPaperFormula, t.at(kE2, kE1), 0.0, 1e-10, ""});
    record(report, {at + "/direct-sum", "direct triple sum", "max entry difference, jet route vs direct triple sum",
                    Provenance::kCrossPipeline, max_entry_difference(t, omega_direct_sum(2, id, g2)), 0.0, 1e-9, ""});
    record(report, {at + "/symmetry", "coefficient symmetry", "max |A(a,b) - A(b,a)|", Provenance::kOracle,
                    t.symmetry_defect(), 0.0, 1e-9, ""});
  }
  const auto same = omega_real(2, id, id);
  record(report, {"pipeline/equal-metrics/oracle", "diagonal-plane coefficient table",
                  "g1 = g2 = I: A(1,0),(1,0) vs integrated central differences", Provenance::kOracle,
                  same.at(kE1, kE1), plane_difference_oracle(RealSymbolContext(2, 1, id, id), 0, 0), 1e-6, ""});
  record(report, {"pipeline/equal-metrics/printed-limit", "diagonal-plane coefficient table",
                  "g1 = g2 = I: A(1,0),(1,0) vs the printed closed form at f = h = 1 (2 pi)",
                  Provenance::kPaperFormula, same.at(kE1, kE1), published::diagonal_a11(1.0, 1.0), 1e-8,
                  "DISCREPANCY-EQ-4.12"});
}

void offdiagonal_table_cases(VerificationReport& report) {
  const auto r = offdiagonal_report(2.0, 1.0);
  const std::string at = "pipeline/offdiagonal/f2-h1";
  const struct {
    const char* label;
    const MultiIndex& a;
    const MultiIndex& b;
    double printed;
    const char* id;
  } parts[] = {{"a11", kE1, kE1, r.printed_a11, "DISCREPANCY-EQ-4.23"},
               {"a12", kE1, kE2, r.printed_a12, "DISCREPANCY-EQ-4.24"},
               {"a21", kE2, kE1, r.printed_a21, "DISCREPANCY-EQ-4.24"},
               {"a22", kE2, kE2, r.printed_a22, "DISCREPANCY-EQ-4.25"}};
  for (const auto& part : parts) {
    record(report, {fmt::format("{}/{}-printed", at, part.label), "off-diagonal coefficient table",
                    "numeric coefficient vs the printed arctan closed form", Provenance::kPaperFormula,
                    r.table.at(part.a, part.b), part.printed, 1e-8, part.id});
  }
  const RealSymbolContext ctx(2, 1, DualMetric::identity(2), plane_metric(2.0, 1.0, 2.0));
  record(report, {at + "/a12-oracle", "off-diagonal coefficient table",
                  "A(1,0),(0,1) vs integrated central differences of the dense trace", Provenance::kOracle,
                  r.table.at(kE1, kE2), plane_difference_oracle(ctx, 0, 1), 1e-6, ""});
  record(report, {at + "/symmetry", "off-diagonal coefficient table", "A(1,0),(0,1) vs A(0,1),(1,0)",
                  Provenance::kOracle, r.table.at(kE1, kE2), r.table.at(kE2, kE1), 1e-10, ""});
  record(report, {at + "/continuity", "off-diagonal continuity at h -> 0",
                  fmt::format("A(1,0),(1,0) at h = {} vs the diagonal metric diag(f, f)", r.continuity_h),
                  Provenance::kOracle, r.continuity_numeric, r.continuity_diagonal_numeric, 1e-6, ""});
  record(report, {at + "/continuity-printed", "off-diagonal continuity at h -> 0",
                  "A(1,0),(1,0) at small h vs the printed diagonal closed form at h = f", Provenance::kPaperFormula,
                  r.continuity_numeric, r.continuity_printed, 1e-6, "DISCREPANCY-EQ-4.12"});
}

void route_and_invariance_cases(VerificationReport& report, InstanceSampler& rng) {
  PipelineSettings quick;
  quick.sphere_level = 8;
  quick.certify = false;
  for (int k = 0; k < 2; ++k) {
    const Eigen::MatrixXd a = rng.spd(4);
    const Eigen::MatrixXd b = rng.spd(4);
    const DualMetric g1(a);
    const DualMetric g2(b);
    const auto jet = omega_real(4, g1, g2, quick);
    const double scale = std::max(1.0, jet.max_abs());
    const std::string at = fmt::format("pipeline/n4/{}", k);
    record(report, {at + "/direct-sum", "direct triple sum",
                    "random SPD pair, same rule: max entry difference / max |A|", Provenance::kCrossPipeline,
                    max_entry_difference(jet, omega_direct_sum(4, g1, g2, quick)) / scale, 0.0, 1e-8, ""});
    record(report, {at + "/closed-form", "T' restriction of the trace jet",
                    "random SPD pair, same rule: jet route vs closed-form route / max |A|", Provenance::kCrossPipeline,
                    max_entry_difference(jet, omega_closed_form(4, g1, g2, quick)) / scale, 0.0, 1e-10, ""});
    record(report, {at + "/additive-constant", "additive-constant insensitivity",
                    "closed-form route with the constant shifted by 7.5 / max |A|", Provenance::kOracle,
                    max_entry_difference(omega_closed_form(4, g1, g2, quick),
                                         omega_closed_form(4, g1, g2, quick, 7.5)) /
                        scale,
                    0.0, 1e-12, ""});
    record(report, {at + "/rescaling", "constant-rescaling invariance",
                    "omega(3 g1, g2 / 4) vs omega(g1, g2) / max |A|", Provenance::kOracle,
                    max_entry_difference(jet, omega_real(4, DualMetric(3.0 * a), DualMetric(0.25 * b), quick)) / scale,
                    0.0, 1e-9, ""});
  }
  PipelineSettings fine;
  fine.sphere_level = 32;
  fine.certify = false;
  const auto t = omega_real(4, DualMetric(rng.spd_in_range(4, 0.5, 2.0)), DualMetric(rng.spd_in_range(4, 0.5, 2.0)),
                            fine);
  record(report, {"pipeline/n4/converged-symmetry", "coefficient symmetry",
                  "level 32, spectra in [0.5, 2]: max |A(a,b) - A(b,a)| / max |A|", Provenance::kOracle,
                  t.symmetry_defect() / std::max(1.0, t.max_abs()), 0.0, 1e-9, ""});
}

void complex_table_cases(VerificationReport& report, InstanceSampler& rng) {
  for (int k = 0; k < 5; ++k) {
    const JInvariantMetric g1(rng.j_invariant(1));
    const JInvariantMetric g2(rng.j_invariant(1));
    const auto t = omega_complex(1, 0, 1, g1, g2);
    const std::string at = fmt::format("pipeline/complex-line/{}", k);
    record(report, {at + "/vanishing", "line-case vanishing of the complex invariant", "max |A(a,b)|",
                    Provenance::kPaperFormula, t.max_abs(), 0.0, 1e-10, ""});
    const ComplexSymbolContext ctx(1, 0, 1, g1, g2);
    const QuadratureRule rule = pipeline_rule(2, PipelineSettings{});
    double worst = 0.0;
    for (std::size_t node = 0; node < rule.size(); ++node) {
      const auto jet = mixed_taylor_jet(ctx, rule.node(node));
      for (const auto& c : jet.coefficients()) worst = std::max(worst, std::abs(c));
    }
    record(report, {at + "/pointwise", "line-case pointwise vanishing of the integrand",
                    "max over nodes of the four mixed derivatives at xi = eta", Provenance::kPaperFormula, worst, 0.0,
                    1e-10, ""});
  }
  PipelineSettings quick;
  quick.sphere_level = 4;
  quick.certify = false;
  const JInvariantMetric g1(rng.j_invariant(2));
  const JInvariantMetric g2(rng.j_invariant(2));
  const auto jet = omega_complex(2, 1, 1, g1, g2, quick);
  record(report, {"pipeline/complex-plane/direct-sum", "direct triple sum",
                  "complex n = 2, (p, q) = (1, 1), same rule: jet vs direct triple sum / max |A|",
                  Provenance::kCrossPipeline,
                  max_entry_difference(jet, omega_direct_sum(2, 1, 1, g1, g2, quick)) / std::max(1.0, jet.max_abs()),
                  0.0, 1e-8, ""});
}

}  // namespace

VerificationReport verify_trace_formulas(int max_n, int samples, std::uint64_t seed) {
  if (max_n < 2 || max_n > 8) throw DomainError("verify_trace_formulas: need 2 <= max_n <= 8");
  if (samples < 1) throw DomainError("verify_trace_formulas: need at least one sample");
  VerificationReport report;
  report.suite = "traces";
  report.seed = seed;
  InstanceSampler rng(seed);
  real_trace_cases(report, max_n, samples, rng);
  real_identity_cases(report, max_n, rng);
  complex_trace_cases(report, max_n, samples, rng);
  order_by_id(report);
  return report;
}

VerificationReport verify_jets(int samples, std::uint64_t seed) {
  if (samples < 1) throw DomainError("verify_jets: need at least one sample");
  VerificationReport report;
  report.suite = "jets";
  report.seed = seed;
  InstanceSampler rng(seed);
  printed_derivative_cases(report, "diagonal-plane", plane_metric(4.0, 0.0, 1.0), 4.0, 1.0,
                           {{"d11", 0, 0, published::diagonal_d11, "DISCREPANCY-EQ-4.5"},
                            {"d12", 0, 1, published::diagonal_d12, "DISCREPANCY-EQ-4.6"},
                            {"d21", 1, 0, published::diagonal_d21, "DISCREPANCY-EQ-4.7"},
                            {"d22", 1, 1, published::diagonal_d22, "DISCREPANCY-EQ-4.8"}},
                           published::diagonal_trace);
  printed_derivative_cases(report, "off-diagonal-plane", plane_metric(2.0, 1.0, 2.0), 2.0, 1.0,
                           {{"d11", 0, 0, published::offdiagonal_d11, "DISCREPANCY-EQ-4.16"},
                            {"d12", 0, 1, published::offdiagonal_d12, "DISCREPANCY-EQ-4.17"},
                            {"d21", 1, 0, published::offdiagonal_d21, "DISCREPANCY-EQ-4.18"},
                            {"d22", 1, 1, published::offdiagonal_d22, "DISCREPANCY-EQ-4.19"}},
                           published::offdiagonal_trace);
  for (int s = 0; s < samples; ++s) {
    const int n = 2 + 2 * (s % 2);
    const RealSymbolContext real(n, n / 2, DualMetric(rng.spd(n)), DualMetric(rng.spd(n)));
    finite_difference_case(report, fmt::format("jets/finite-difference/real-n{}/{}", n, s), real, n, rng);
    const int c = 1 + s % 2;
    const ComplexSymbolContext cx(c, c - 1, 1, JInvariantMetric(rng.j_invariant(c)),
                                  JInvariantMetric(rng.j_invariant(c)));
    finite_difference_case(report, fmt::format("jets/finite-difference/complex-n{}/{}", c, s), cx, 2 * c, rng);
  }
  for (int s = 0; s < std::min(samples, 4); ++s) {
    const RealSymbolContext real(4, 2, DualMetric(rng.spd(4)), DualMetric(rng.spd(4)));
    high_order_case(report, fmt::format("jets/t-prime/real-n4/{}", s), real, 4, rng);
    const ComplexSymbolContext cx(2, 1, 1, JInvariantMetric(rng.j_invariant(2)), JInvariantMetric(rng.j_invariant(2)));
    high_order_case(report, fmt::format("jets/t-prime/complex-n2/{}", s), cx, 4, rng);
  }
  order_by_id(report);
  return report;
}

VerificationReport verify_quadrature(std::uint64_t seed) {
  VerificationReport report;
  report.suite = "quadrature";
  report.seed = seed;
  InstanceSampler rng(seed);
  rule_sanity_cases(report);
  diagonal_integral_cases(report);
  offdiagonal_integral_cases(report);
  monte_carlo_cases(report, rng);
  order_by_id(report);
  return report;
}

VerificationReport verify_pipeline(std::uint64_t seed) {
  VerificationReport report;
  report.suite = "pipeline";
  report.seed = seed;
  InstanceSampler rng(seed);
  plane_table_cases(report);
  offdiagonal_table_cases(report);
  route_and_invariance_cases(report, rng);
  complex_table_cases(report, rng);
  order_by_id(report);
  return report;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"traces", "jets", "quadrature", "pipeline", "all"};
  return names;
}

VerificationReport run_suite(const std::string& suite, std::uint64_t seed) {
  if (suite == "traces") return verify_trace_formulas(6, 100, seed);
  if (suite == "jets") return verify_jets(20, seed);
  if (suite == "quadrature") return verify_quadrature(seed);
  if (suite == "pipeline") return verify_pipeline(seed);
  if (suite == "all") {
    VerificationReport all;
    all.suite = "all";
    all.seed = seed;
    for (const auto& name : {"traces", "jets", "quadrature", "pipeline"}) {
      auto part = run_suite(name, seed);
      for (auto& c : part.cases) all.cases.push_back(std::move(c));
    }
    order_by_id(all);
    return all;
  }
  throw DomainError("unknown verification suite '" + suite + "'");
}

namespace {

nlohmann::json complex_json(Complex z) { return {{"re", z.real()}, {"im", z.imag()}}; }
Complex complex_from(const nlohmann::json& j) { return {j.at("re").get<double>(), j.at("im").get<double>()}; }

template <class E>
E enum_from(const std::string& text, std::initializer_list<E> values) {
  for (E v : values) {
    if (text == to_string(v)) return v;
  }
  throw DomainError("report: unknown enum value '" + text + "'");
}

}  // namespace

std::string to_json_text(const VerificationReport& report) {
  nlohmann::json cases = nlohmann::json::array();
  for (const auto& c : report.cases) {
    cases.push_back({{"id", c.id},
                     {"formula", c.formula},
                     {"description", c.description},
                     {"source", to_string(c.source)},
                     {"computed", complex_json(c.computed)},
                     {"reference", complex_json(c.reference)},
                     {"abs_error", c.abs_error},
                     {"rel_error", c.rel_error},
                     {"tolerance", c.tolerance},
                     {"verdict", to_string(c.verdict)},
                     {"discrepancy", c.discrepancy}});
  }
  nlohmann::json coverage = nlohmann::json::array();
  for (const auto& e : report.coverage()) coverage.push_back({{"formula", e.formula}, {"cases", e.cases}});
  nlohmann::json out = {{"suite", report.suite},
                        {"seed", report.seed},
                        {"cases", cases},
                        {"summary",
                         {{"pass", report.count(Verdict::kPass)},
                          {"fail", report.count(Verdict::kFail)},
                          {"informational", report.count(Verdict::kInformational)}}},
                        {"discrepancies", report.discrepancies()},
                        {"coverage", coverage}};
  return out.dump(2) + "\n";
}

VerificationReport report_from_json_text(const std::string& text) {
  const auto j = nlohmann::json::parse(text);
  VerificationReport report;
  report.suite = j.at("suite").get<std::string>();
  report.seed = j.at("seed").get<std::uint64_t>();
  for (const auto& c : j.at("cases")) {
    VerificationCase v;
    v.id = c.at("id").get<std::string>();
    v.formula = c.at("formula").get<std::string>();
    v.description = c.at("description").get<std::string>();
    v.source = enum_from(c.at("source").get<std::string>(),
                         {Provenance::kPaperFormula, Provenance::kOracle, Provenance::kCrossPipeline});
    v.computed = complex_from(c.at("computed"));
    v.reference = complex_from(c.at("reference"));
    v.abs_error = c.at("abs_error").get<double>();
    v.rel_error = c.at("rel_error").get<double>();
    v.tolerance = c.at("tolerance").get<double>();
    v.verdict =
        enum_from(c.at("verdict").get<std::string>(), {Verdict::kPass, Verdict::kFail, Verdict::kInformational});
    v.discrepancy = c.at("discrepancy").get<std::string>();
    report.cases.push_back(std::move(v));
  }
  return report;
}

}  // namespace dcinv
