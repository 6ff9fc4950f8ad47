#include "dcinv/invariant_pipeline.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <functional>
#include <map>

#include <fmt/format.h>

#include "dcinv/published_forms.hpp"

namespace dcinv {

const char* to_string(FormMode mode) { return mode == FormMode::kReal ? "real" : "complex"; }

const char* to_string(Convention convention) {
  return convention == Convention::kD ? "D" : "partial";
}

const char* to_string(Route route) {
  switch (route) {
    case Route::kJet:
      return "jet";
    case Route::kDirectSum:
      return "direct-sum";
    case Route::kClosedForm:
      return "closed-form";
  }
  return "unknown";
}

const CoefficientEntry* CoefficientTable::find(std::span<const int> a, std::span<const int> b) const {
  for (const auto& e : entries) {
    if (std::ranges::equal(e.a, a) && std::ranges::equal(e.b, b)) return &e;
  }
  return nullptr;
}

Complex CoefficientTable::at(std::span<const int> a, std::span<const int> b) const {
  const auto* e = find(a, b);
  if (!e) throw ShapeError("coefficient table has no entry " + to_string(a) + "," + to_string(b));
  return e->value;
}

double CoefficientTable::max_abs() const {
  double out = 0.0;
  for (const auto& e : entries) out = std::max(out, std::abs(e.value));
  return out;
}

double CoefficientTable::symmetry_defect() const {
  double out = 0.0;
  for (const auto& e : entries) {
    const auto* t = find(e.b, e.a);
    if (!t) throw ShapeError("coefficient table is missing the transpose of " + to_string(e.a));
    out = std::max(out, std::abs(e.value - t->value));
  }
  return out;
}

CoefficientTable CoefficientTable::in_convention(Convention target) const {
  CoefficientTable out = *this;
  if (target == convention) return out;
  // (-i)^k, and its inverse i^k going back.
  const Complex step = (target == Convention::kPartial) ? Complex(0.0, -1.0) : Complex(0.0, 1.0);
  for (auto& e : out.entries) {
    const int k = total_degree(e.a) + total_degree(e.b);
    Complex factor{1.0, 0.0};
    for (int i = 0; i < k; ++i) factor *= step;
    e.value *= factor;
  }
  out.convention = target;
  return out;
}

double max_entry_difference(const CoefficientTable& x, const CoefficientTable& y) {
  if (x.entries.size() != y.entries.size()) throw ShapeError("coefficient tables differ in size");
  double out = 0.0;
  for (const auto& e : x.entries) {
    const auto* o = y.find(e.a, e.b);
    if (!o) throw ShapeError("coefficient tables have different index sets");
    out = std::max(out, std::abs(e.value - o->value));
  }
  return out;
}

std::string metric_fingerprint(const Eigen::MatrixXd& g) {
  std::uint64_t hash = 1469598103934665603ull;
  for (Eigen::Index r = 0; r < g.rows(); ++r) {
    for (Eigen::Index c = 0; c < g.cols(); ++c) {
      const double v = g(r, c) == 0.0 ? 0.0 : g(r, c);  // fold -0.0
      unsigned char bytes[sizeof(double)];
      std::memcpy(bytes, &v, sizeof(double));
      for (unsigned char byte : bytes) {
        hash ^= byte;
        hash *= 1099511628211ull;
      }
    }
  }
  return fmt::format("{}x{}:{:016x}", g.rows(), g.cols(), hash);
}

QuadratureRule pipeline_rule(int d, const PipelineSettings& settings, bool refined) {
  if (settings.circle_nodes < 1 || settings.sphere_level < 1 || settings.convergence_factor < 1) {
    throw DomainError("pipeline: quadrature resolution and convergence factor must be >= 1");
  }
  // The integrand is homogeneous of even degree -N, hence even.
  const int factor = refined ? settings.convergence_factor : 1;
  if (d == 2) {
    const int k = settings.circle_nodes * factor;
    return circle_rule(k, k % 2 == 0);
  }
  return sphere_rule(d, settings.sphere_level * factor, true);
}

namespace {

// Slots are the monomials u^gamma v^delta of degree N with |gamma|, |delta| >= 1.
struct MixedPlan {
  int d = 0;
  int order = 0;
  std::shared_ptr<const MonomialTable> small;  // d variables, cap N - 1
  std::shared_ptr<const MonomialTable> big;    // 2d variables, cap N
  std::vector<std::uint32_t> gamma;            // index in `small`
  std::vector<std::uint32_t> delta;
  std::vector<std::size_t> target;             // index in `big`

  MixedPlan(int dim, int n) : d(dim), order(n) {
    if (2 * d > MonomialTable::kMaxVars || order > MonomialTable::kMaxCap) {
      throw DomainError("pipeline: dimension too large for the jet tables");
    }
    small = MonomialTable::get(d, order - 1);
    big = MonomialTable::get(2 * d, order);
    for (std::size_t k = big->degree_begin(order); k < big->degree_begin(order + 1); ++k) {
      const auto e = big->exponent(k);
      const auto g = e.subspan(0, static_cast<std::size_t>(d));
      const auto h = e.subspan(static_cast<std::size_t>(d));
      if (total_degree(g) == 0 || total_degree(h) == 0) continue;
      gamma.push_back(static_cast<std::uint32_t>(small->find(g)));
      delta.push_back(static_cast<std::uint32_t>(small->find(h)));
      target.push_back(k);
    }
  }

  std::size_t slots() const { return target.size(); }
};

template <class J>
std::vector<J> shifted_variables(const std::shared_ptr<const MonomialTable>& table,
                                 std::span<const double> xi, int offset = 0) {
  using T = typename J::value_type;
  std::vector<J> out;
  out.reserve(xi.size());
  for (std::size_t i = 0; i < xi.size(); ++i) {
    out.push_back(J::variable(table, offset + static_cast<int>(i), T(xi[i])));
  }
  return out;
}

// sum_{r,c} X_rc[gamma] Y_cr[delta] for each slot, scaled by `weights`
// (Taylor coefficients for the jet route, derivatives for the direct one).
template <class T>
void mixed_trace(const MixedPlan& plan, const OperatorMatrix<Jet<T>>& x, const OperatorMatrix<Jet<T>>& y,
                 std::vector<T>& out) {
  out.assign(plan.slots(), T{});
  const std::size_t dim = x.rows();
  for (std::size_t r = 0; r < dim; ++r) {
    for (std::size_t c = 0; c < dim; ++c) {
      const auto xs = x(r, c).coefficients();
      const auto ys = y(c, r).coefficients();
      if (xs.empty() || ys.empty()) continue;
      for (std::size_t k = 0; k < plan.slots(); ++k) out[k] += xs[plan.gamma[k]] * ys[plan.delta[k]];
    }
  }
}

template <class T>
std::vector<T> integrate_slots(const MixedPlan& plan, const QuadratureRule& rule, std::size_t threads,
                               const std::function<void(std::span<const double>, std::vector<T>&)>& node) {
  if (threads == 0) threads = default_thread_count();
  const std::vector<T> zero(plan.slots(), T{});
  return ordered_block_reduce<std::vector<T>>(
      rule.size(), 32, zero,
      [&](std::vector<T>& acc, std::size_t k) {
        std::vector<T> value;
        node(rule.node(k), value);
        const double w = rule.weight(k);
        for (std::size_t s = 0; s < value.size(); ++s) {
          if (!is_finite(value[s])) {
            throw EvaluationError(k, "pipeline integrand is not finite at node " + std::to_string(k));
          }
          acc[s] += w * value[s];
        }
      },
      [](std::vector<T>& out, const std::vector<T>& part) {
        for (std::size_t s = 0; s < out.size(); ++s) out[s] += part[s];
      },
      threads);
}

template <class T>
std::vector<CoefficientEntry> entries_from_jet(const MixedPlan& plan, const Jet<T>& a) {
  std::vector<CoefficientEntry> out;
  const auto& big = *plan.big;
  const auto d = static_cast<std::size_t>(plan.d);
  for (std::size_t k = big.degree_begin(plan.order); k < big.degree_begin(plan.order + 1); ++k) {
    const auto e = big.exponent(k);
    MultiIndex ai(e.begin(), e.begin() + static_cast<std::ptrdiff_t>(d));
    MultiIndex bi(e.begin() + static_cast<std::ptrdiff_t>(d), e.end());
    if (total_degree(ai) == 0 || total_degree(bi) == 0) continue;
    out.push_back(CoefficientEntry{std::move(ai), std::move(bi), Complex(a[k])});
  }
  return out;
}

// Taylor coefficients c_{gamma,delta} -> A via (u, v) -> (u + v, v).
template <class T>
std::vector<CoefficientEntry> assemble_by_shift(const MixedPlan& plan, const std::vector<T>& slots) {
  Jet<T> c(plan.big);
  for (std::size_t k = 0; k < plan.slots(); ++k) c[plan.target[k]] = slots[k];
  return entries_from_jet(plan, substitute_shift(t_prime(c, plan.order)));
}

// Derivative traces tr(d^gamma s1 d^delta s2) -> A by the explicit sum over
// gamma = alpha + beta: A_{beta, alpha + delta} += tr / (alpha! beta! delta!).
template <class T>
std::vector<CoefficientEntry> assemble_by_triple_sum(const MixedPlan& plan, const std::vector<T>& slots) {
  Jet<T> acc(plan.big);
  const auto d = static_cast<std::size_t>(plan.d);
  MultiIndex alpha(d);
  MultiIndex key(2 * d);
  for (std::size_t k = 0; k < plan.slots(); ++k) {
    const auto e = plan.big->exponent(plan.target[k]);
    const auto gamma = e.subspan(0, d);
    const auto delta = e.subspan(d);
    const double delta_fact = multi_factorial(delta);
    std::fill(alpha.begin(), alpha.end(), 0);
    while (true) {
      MultiIndex beta(d);
      for (std::size_t i = 0; i < d; ++i) beta[i] = gamma[i] - alpha[i];
      if (total_degree(beta) >= 1) {
        for (std::size_t i = 0; i < d; ++i) {
          key[i] = beta[i];
          key[d + i] = alpha[i] + delta[i];
        }
        const auto idx = static_cast<std::size_t>(plan.big->find(key));
        acc[idx] += slots[k] / (multi_factorial(alpha) * multi_factorial(beta) * delta_fact);
      }
      std::size_t i = 0;
      while (i < d && alpha[i] == gamma[i]) alpha[i++] = 0;
      if (i == d) break;
      ++alpha[i];
    }
  }
  return entries_from_jet(plan, acc);
}

template <class T>
void derivative_scale(const MixedPlan& plan, const OperatorMatrix<Jet<T>>& m, OperatorMatrix<Jet<T>>& out) {
  out = m;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      auto coeffs = out(r, c).coefficients();
      for (std::size_t k = 0; k < coeffs.size(); ++k) coeffs[k] *= multi_factorial(plan.small->exponent(k));
    }
  }
}

// M^{-1/2} for the geometric mean M = G1 # G2, so that both quadratic forms
// become equally well conditioned after xi = M^{-1/2} eta.
Eigen::MatrixXd balancing_map(const Eigen::MatrixXd& g1, const Eigen::MatrixXd& g2) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> e1(g1);
  const Eigen::MatrixXd root = e1.operatorSqrt();
  const Eigen::MatrixXd inv_root = e1.operatorInverseSqrt();
  Eigen::MatrixXd inner = inv_root * g2 * inv_root;
  inner = 0.5 * (inner + inner.transpose());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> e2(inner);
  Eigen::MatrixXd mean = root * e2.operatorSqrt() * root;
  mean = 0.5 * (mean + mean.transpose());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> em(mean);
  return em.operatorInverseSqrt();
}

// One integration of the chosen route on one rule.
using RouteRunner = std::function<std::vector<CoefficientEntry>(const QuadratureRule&)>;

CoefficientTable run_certified(CoefficientTable shell, int d, const Eigen::MatrixXd& g1,
                               const Eigen::MatrixXd& g2, const PipelineSettings& settings,
                               const RouteRunner& run) {
  const auto start = std::chrono::steady_clock::now();
  const bool precondition = settings.precondition && !settings.metric_unit_sphere;
  const Eigen::MatrixXd map = precondition ? balancing_map(g1, g2) : Eigen::MatrixXd();
  auto make_rule = [&](bool refined) {
    QuadratureRule rule = pipeline_rule(d, settings, refined);
    if (settings.metric_unit_sphere) {
      std::vector<double> flat(g1.data(), g1.data() + g1.size());
      rule = radial_projection(rule, flat);
    } else if (precondition) {
      rule = homogeneous_pullback(rule, map);
    }
    return rule;
  };
  const QuadratureRule base = make_rule(false);
  shell.entries = run(base);
  auto& meta = shell.metadata;
  meta.rule = base.description();
  meta.nodes = base.size();
  meta.circle_nodes = settings.circle_nodes;
  meta.sphere_level = settings.sphere_level;
  meta.convergence_factor = settings.convergence_factor;
  meta.metric_unit_sphere = settings.metric_unit_sphere;
  meta.preconditioned = precondition;
  meta.convergence_tolerance = settings.convergence_tolerance;
  meta.g1_fingerprint = metric_fingerprint(g1);
  meta.g2_fingerprint = metric_fingerprint(g2);
  if (settings.certify) {
    const QuadratureRule refined = make_rule(true);
    CoefficientTable other = shell;
    other.entries = run(refined);
    meta.certified = true;
    meta.check_rule = refined.description();
    meta.check_nodes = refined.size();
    meta.convergence_delta = max_entry_difference(shell, other);
    meta.check_entries = std::move(other.entries);
    meta.converged =
        meta.convergence_delta <= settings.convergence_tolerance * std::max(1.0, shell.max_abs());
    if (!meta.converged) {
      meta.warnings.push_back(fmt::format("quadrature not converged: |base - refined| = {:.3e}",
                                          meta.convergence_delta));
    }
  }
  meta.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return shell;
}

void check_real(int n, const DualMetric& g1, const DualMetric& g2) {
  if (n < 2 || n % 2 != 0) throw DomainError("real pipeline: n must be even and >= 2, got " + std::to_string(n));
  if (g1.dim() != n || g2.dim() != n) throw ShapeError("real pipeline: metric dimension does not match n");
}

void check_complex(int n, int p, int q, const JInvariantMetric& g1, const JInvariantMetric& g2) {
  if (n < 1 || q < 1 || p < 0 || p + q != n) {
    throw DomainError(fmt::format("complex pipeline: need p + q = n and q >= 1, got n={} p={} q={}", n, p, q));
  }
  if (g1.n() != n || g2.n() != n) throw ShapeError("complex pipeline: metric dimension does not match n");
}

CoefficientTable real_shell(int n, Route route) {
  CoefficientTable t;
  t.mode = FormMode::kReal;
  t.n = n;
  t.m = n / 2;
  t.metadata.route = route;
  return t;
}

CoefficientTable complex_shell(int n, int p, int q, Route route) {
  CoefficientTable t;
  t.mode = FormMode::kComplex;
  t.n = n;
  t.p = p;
  t.q = q;
  t.metadata.route = route;
  return t;
}

// The trace factors through the pair products: with p_k, q_l the normalized
// products of the two symbols, slot (gamma, delta) is
// sum_k p_k[gamma] (sum_l W_kl q_l[delta]).
template <class Context, class T>
void jet_node(const Context& ctx, const MixedPlan& plan, std::span<const double> xi, std::vector<T>& out) {
  const auto vars = shifted_variables<Jet<double>>(plan.small, xi);
  const std::span<const Jet<double>> s(vars);
  const auto& pairing = ctx.pairing();
  const auto p = pairing.first().normalized_products(s);
  const auto q = pairing.second().normalized_products(s);
  const auto& w = pairing.weights();
  const std::size_t width = plan.small->size();
  thread_local std::vector<T> folded;
  folded.assign(p.size() * width, T{});
  for (std::size_t k = 0; k < p.size(); ++k) {
    T* row = folded.data() + k * width;
    for (std::size_t l = 0; l < q.size(); ++l) {
      const T c = w(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(l));
      if (c == T{}) continue;
      const auto ql = q[l].coefficients();
      for (std::size_t j = 0; j < ql.size(); ++j) row[j] += c * ql[j];
    }
  }
  out.assign(plan.slots(), T{});
  for (std::size_t k = 0; k < p.size(); ++k) {
    const auto pk = p[k].coefficients();
    if (pk.empty()) continue;
    const T* row = folded.data() + k * width;
    for (std::size_t i = 0; i < plan.slots(); ++i) out[i] += pk[plan.gamma[i]] * row[plan.delta[i]];
  }
}

template <class Context, class J>
void closed_node(const Context& ctx, const MixedPlan& plan, std::span<const double> xi, double shift,
                 std::vector<typename J::value_type>& out) {
  const auto x = shifted_variables<J>(plan.big, xi, 0);
  const auto y = shifted_variables<J>(plan.big, xi, plan.d);
  const auto psi = psi_closed<J>(ctx, std::span<const J>(x), std::span<const J>(y), shift);
  const auto tp = t_prime(psi, plan.order);
  out.resize(plan.slots());
  for (std::size_t k = 0; k < plan.slots(); ++k) out[k] = tp[plan.target[k]];
}

}  // namespace

Jet<double> mixed_taylor_jet(const RealSymbolContext& ctx, std::span<const double> xi) {
  const MixedPlan plan(ctx.n(), ctx.n());
  std::vector<double> slots;
  jet_node<RealSymbolContext, double>(ctx, plan, xi, slots);
  Jet<double> out(plan.big);
  for (std::size_t k = 0; k < plan.slots(); ++k) out[plan.target[k]] = slots[k];
  return out;
}

Jet<Complex> mixed_taylor_jet(const ComplexSymbolContext& ctx, std::span<const double> xi) {
  const MixedPlan plan(2 * ctx.n(), 2 * ctx.n());
  std::vector<Complex> slots;
  jet_node<ComplexSymbolContext, Complex>(ctx, plan, xi, slots);
  Jet<Complex> out(plan.big);
  for (std::size_t k = 0; k < plan.slots(); ++k) out[plan.target[k]] = slots[k];
  return out;
}

CoefficientTable omega_real(int n, const DualMetric& g1, const DualMetric& g2,
                            const PipelineSettings& settings) {
  check_real(n, g1, g2);
  const RealSymbolContext ctx(n, n / 2, g1, g2);
  const MixedPlan plan(n, n);
  return run_certified(real_shell(n, Route::kJet), n, g1.matrix(), g2.matrix(), settings,
                       [&](const QuadratureRule& rule) {
                         const auto slots = integrate_slots<double>(
                             plan, rule, settings.threads, [&](std::span<const double> xi, std::vector<double>& out) {
                               jet_node<RealSymbolContext, double>(ctx, plan, xi, out);
                             });
                         return assemble_by_shift(plan, slots);
                       });
}

CoefficientTable omega_direct_sum(int n, const DualMetric& g1, const DualMetric& g2,
                                  const PipelineSettings& settings) {
  check_real(n, g1, g2);
  const RealSymbolContext ctx(n, n / 2, g1, g2);
  const MixedPlan plan(n, n);
  return run_certified(
      real_shell(n, Route::kDirectSum), n, g1.matrix(), g2.matrix(), settings, [&](const QuadratureRule& rule) {
        const auto slots = integrate_slots<double>(
            plan, rule, settings.threads, [&](std::span<const double> xi, std::vector<double>& out) {
              const auto vars = shifted_variables<Jet<double>>(plan.small, xi);
              const std::span<const Jet<double>> s(vars);
              OperatorMatrix<Jet<double>> d1(0, 0, Jet<double>());
              OperatorMatrix<Jet<double>> d2(0, 0, Jet<double>());
              derivative_scale(plan, ctx.first()(s), d1);
              derivative_scale(plan, ctx.second()(s), d2);
              mixed_trace(plan, d1, d2, out);
            });
        return assemble_by_triple_sum(plan, slots);
      });
}

CoefficientTable omega_closed_form(int n, const DualMetric& g1, const DualMetric& g2,
                                   const PipelineSettings& settings, double shift) {
  check_real(n, g1, g2);
  const RealSymbolContext ctx(n, n / 2, g1, g2);
  const MixedPlan plan(n, n);
  return run_certified(real_shell(n, Route::kClosedForm), n, g1.matrix(), g2.matrix(), settings,
                       [&](const QuadratureRule& rule) {
                         const auto slots = integrate_slots<double>(
                             plan, rule, settings.threads, [&](std::span<const double> xi, std::vector<double>& out) {
                               closed_node<RealSymbolContext, Jet<double>>(ctx, plan, xi, shift, out);
                             });
                         return assemble_by_shift(plan, slots);
                       });
}

CoefficientTable omega_complex(int n, int p, int q, const JInvariantMetric& g1,
                               const JInvariantMetric& g2, const PipelineSettings& settings) {
  check_complex(n, p, q, g1, g2);
  const ComplexSymbolContext ctx(n, p, q, g1, g2);
  const MixedPlan plan(2 * n, 2 * n);
  return run_certified(complex_shell(n, p, q, Route::kJet), 2 * n, g1.matrix(), g2.matrix(), settings,
                       [&](const QuadratureRule& rule) {
                         const auto slots = integrate_slots<Complex>(
                             plan, rule, settings.threads, [&](std::span<const double> xi, std::vector<Complex>& out) {
                               jet_node<ComplexSymbolContext, Complex>(ctx, plan, xi, out);
                             });
                         return assemble_by_shift(plan, slots);
                       });
}

CoefficientTable omega_direct_sum(int n, int p, int q, const JInvariantMetric& g1,
                                  const JInvariantMetric& g2, const PipelineSettings& settings) {
  check_complex(n, p, q, g1, g2);
  const ComplexSymbolContext ctx(n, p, q, g1, g2);
  const MixedPlan plan(2 * n, 2 * n);
  return run_certified(
      complex_shell(n, p, q, Route::kDirectSum), 2 * n, g1.matrix(), g2.matrix(), settings,
      [&](const QuadratureRule& rule) {
        const auto slots = integrate_slots<Complex>(
            plan, rule, settings.threads, [&](std::span<const double> xi, std::vector<Complex>& out) {
              const auto vars = shifted_variables<Jet<double>>(plan.small, xi);
              const std::span<const Jet<double>> s(vars);
              OperatorMatrix<Jet<Complex>> d1(0, 0, Jet<Complex>());
              OperatorMatrix<Jet<Complex>> d2(0, 0, Jet<Complex>());
              derivative_scale(plan, ctx.first()(s), d1);
              derivative_scale(plan, ctx.second()(s), d2);
              mixed_trace(plan, d1, d2, out);
            });
        return assemble_by_triple_sum(plan, slots);
      });
}

CoefficientTable omega_closed_form(int n, int p, int q, const JInvariantMetric& g1,
                                   const JInvariantMetric& g2, const PipelineSettings& settings,
                                   double shift) {
  check_complex(n, p, q, g1, g2);
  const ComplexSymbolContext ctx(n, p, q, g1, g2);
  const MixedPlan plan(2 * n, 2 * n);
  return run_certified(complex_shell(n, p, q, Route::kClosedForm), 2 * n, g1.matrix(), g2.matrix(),
                       settings, [&](const QuadratureRule& rule) {
                         const auto slots = integrate_slots<Complex>(
                             plan, rule, settings.threads, [&](std::span<const double> xi, std::vector<Complex>& out) {
                               closed_node<ComplexSymbolContext, Jet<Complex>>(ctx, plan, xi, shift, out);
                             });
                         return assemble_by_shift(plan, slots);
                       });
}

OffDiagonalReport offdiagonal_report(double f, double h, const PipelineSettings& settings) {
  if (!(f > h && h > 0.0)) throw DomainError("off-diagonal report: need f > h > 0");
  OffDiagonalReport r;
  r.f = f;
  r.h = h;
  auto offdiag = [](double ff, double hh) {
    Eigen::MatrixXd g(2, 2);
    g << ff, hh, hh, ff;
    return DualMetric(g);
  };
  const DualMetric id = DualMetric::identity(2);
  r.table = omega_real(2, id, offdiag(f, h), settings);
  r.printed_a11 = published::offdiagonal_a11(f, h);
  r.printed_a12 = published::offdiagonal_a12(f, h);
  r.printed_a21 = published::offdiagonal_a21(f, h);
  r.printed_a22 = published::offdiagonal_a22(f, h);
  r.continuity_h = 1e-4 * f;
  const MultiIndex e1 = {1, 0};
  r.continuity_numeric = omega_real(2, id, offdiag(f, r.continuity_h), settings).at(e1, e1).real();
  Eigen::MatrixXd diag = Eigen::MatrixXd::Identity(2, 2) * f;
  r.continuity_diagonal_numeric = omega_real(2, id, DualMetric(diag), settings).at(e1, e1).real();
  r.continuity_printed = published::diagonal_a11(f, f);
  return r;
}

}  // namespace dcinv
