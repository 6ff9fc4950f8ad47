#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "dcinv/complex_forms.hpp"
#include "dcinv/exterior_real.hpp"
#include "dcinv/jet.hpp"
#include "dcinv/ring.hpp"
#include "dcinv/sphere_quadrature.hpp"
#include "dcinv/symbol_engine.hpp"

namespace dcinv {

enum class FormMode { kReal, kComplex };

// kD: multipliers of (D^a f1)(D^b f2) with D = -i d. kPartial: multipliers of
// (d^a f1)(d^b f2), i.e. the D value times (-i)^{|a|+|b|}.
enum class Convention { kD, kPartial };

const char* to_string(FormMode mode);
const char* to_string(Convention convention);

enum class Route { kJet, kDirectSum, kClosedForm };
const char* to_string(Route route);

struct PipelineSettings {
  int circle_nodes = 512;  // sphere dimension 2
  int sphere_level = 32;   // sphere dimension >= 3
  int convergence_factor = 2;  // the certification rerun multiplies the resolution by this
  bool certify = true;
  double convergence_tolerance = 1e-9;  // relative to max(1, max |A|)
  bool metric_unit_sphere = false;      // push nodes onto {|xi|_{g1} = 1}
  // Integrate in the variables eta = M^{1/2} xi, M the geometric mean of the
  // two metrics. Exact for the degree -d integrand; ignored with
  // metric_unit_sphere.
  bool precondition = true;
  std::size_t threads = 0;              // 0: default_thread_count()
};

struct CoefficientEntry {
  MultiIndex a;
  MultiIndex b;
  Complex value;
};

struct TableMetadata {
  Route route = Route::kJet;
  std::string rule;
  std::size_t nodes = 0;
  int circle_nodes = 0;
  int sphere_level = 0;
  int convergence_factor = 0;
  bool metric_unit_sphere = false;
  bool preconditioned = false;
  bool certified = false;
  std::string check_rule;
  std::size_t check_nodes = 0;
  std::vector<CoefficientEntry> check_entries;  // values from the rerun
  double convergence_delta = 0.0;               // max |entries - check_entries|
  double convergence_tolerance = 0.0;
  bool converged = true;
  std::string g1_fingerprint;
  std::string g2_fingerprint;
  double wall_seconds = 0.0;
  std::vector<std::string> warnings;
};

class CoefficientTable {
 public:
  FormMode mode = FormMode::kReal;
  int n = 0;
  int m = 0;  // real form degree
  int p = 0;  // complex bidegree
  int q = 0;
  Convention convention = Convention::kD;
  std::vector<CoefficientEntry> entries;
  TableMetadata metadata;

  // Number of real variables: n (real) or 2n (complex).
  int variables() const { return mode == FormMode::kReal ? n : 2 * n; }
  // |a| + |b| for every entry.
  int order() const { return variables(); }

  const CoefficientEntry* find(std::span<const int> a, std::span<const int> b) const;
  Complex at(std::span<const int> a, std::span<const int> b) const;  // ShapeError if absent
  double max_abs() const;
  // max |A_{a,b} - A_{b,a}|
  double symmetry_defect() const;
  CoefficientTable in_convention(Convention target) const;
};

// Largest entrywise |difference|; ShapeError when the index sets differ.
double max_entry_difference(const CoefficientTable& x, const CoefficientTable& y);

// Hex digest of a metric matrix, used to tag tables.
std::string metric_fingerprint(const Eigen::MatrixXd& g);

// Rule used for dimension d; `refined` multiplies the resolution by the
// convergence factor.
QuadratureRule pipeline_rule(int d, const PipelineSettings& settings, bool refined = false);

// Middle-degree real forms, n even.
CoefficientTable omega_real(int n, const DualMetric& g1, const DualMetric& g2,
                            const PipelineSettings& settings = {});
// Same coefficients from the explicit triple sum over derivative matrices of
// the matrix-valued symbols.
CoefficientTable omega_direct_sum(int n, const DualMetric& g1, const DualMetric& g2,
                                  const PipelineSettings& settings = {});
// Same coefficients from the closed trace formula, with `shift` added to it.
CoefficientTable omega_closed_form(int n, const DualMetric& g1, const DualMetric& g2,
                                   const PipelineSettings& settings = {}, double shift = 0.0);

// (p, q)-forms with p + q = n, q >= 1.
CoefficientTable omega_complex(int n, int p, int q, const JInvariantMetric& g1,
                               const JInvariantMetric& g2, const PipelineSettings& settings = {});
CoefficientTable omega_direct_sum(int n, int p, int q, const JInvariantMetric& g1,
                                  const JInvariantMetric& g2, const PipelineSettings& settings = {});
CoefficientTable omega_closed_form(int n, int p, int q, const JInvariantMetric& g1,
                                   const JInvariantMetric& g2, const PipelineSettings& settings = {},
                                   double shift = 0.0);

// The integrand before integration: the jet in (u, v) whose coefficients are
// the u^beta v^delta Taylor coefficients of psi(xi + u, xi + v) with
// |beta| + |delta| = N, |beta|, |delta| >= 1.
Jet<double> mixed_taylor_jet(const RealSymbolContext& ctx, std::span<const double> xi);
Jet<Complex> mixed_taylor_jet(const ComplexSymbolContext& ctx, std::span<const double> xi);

struct OffDiagonalReport {
  double f = 0.0;
  double h = 0.0;
  CoefficientTable table;
  double printed_a11 = 0.0;
  double printed_a12 = 0.0;
  double printed_a21 = 0.0;
  double printed_a22 = 0.0;
  // Degenerate limit: g2 = [[f, eps], [eps, f]] against g2 = diag(f, f).
  double continuity_h = 0.0;
  double continuity_numeric = 0.0;
  double continuity_diagonal_numeric = 0.0;
  double continuity_printed = 0.0;  // diagonal closed form at h = f
};

// g1 = I, g2 = [[f, h], [h, f]], f > h > 0.
OffDiagonalReport offdiagonal_report(double f, double h, const PipelineSettings& settings = {});

}  // namespace dcinv
