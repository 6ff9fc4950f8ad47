#include "dcinv/reproduction.hpp"

#include <algorithm>
#include <cmath>

#include <fmt/format.h>
#include <json.hpp>

#include "dcinv/errors.hpp"
#include "dcinv/published_forms.hpp"
#include "dcinv/random_instances.hpp"

namespace dcinv {

namespace {

const MultiIndex kE1 = {1, 0};
const MultiIndex kE2 = {0, 1};

DualMetric plane(double g11, double g12, double g22) {
  Eigen::MatrixXd g(2, 2);
  g << g11, g12, g12, g22;
  return DualMetric(g);
}

ReproductionTable diagonal_section(const PipelineSettings& settings) {
  ReproductionTable t;
  t.section = "4-diagonal";
  t.columns = {"f", "h", "printed_a11", "computed_a11", "abs_delta_a11", "printed_a22", "computed_a22",
               "abs_delta_a22", "computed_a12"};
  double worst = 0.0;
  double worst_ratio = 0.0;
  for (const auto& [f, h] : std::vector<std::pair<double, double>>{{4.0, 1.0}, {2.0, 0.5}, {9.0, 4.0}, {1.0, 1.0}}) {
    const auto table = omega_real(2, DualMetric::identity(2), plane(f, 0.0, h), settings);
    t.all_converged = t.all_converged && table.metadata.converged;
    const double a11 = table.at(kE1, kE1).real();
    const double a22 = table.at(kE2, kE2).real();
    const double p11 = published::diagonal_a11(f, h);
    const double p22 = published::diagonal_a22(f, h);
    t.rows.push_back({f, h, p11, a11, std::abs(a11 - p11), p22, a22, std::abs(a22 - p22),
                      std::abs(table.at(kE1, kE2))});
    worst = std::max({worst, std::abs(a11 - p11), std::abs(a22 - p22)});
    worst_ratio = std::max(worst_ratio, a11 / p11);
  }
  t.summary = {{"max_abs_delta", worst}, {"max_computed_over_printed", worst_ratio}};
  return t;
}

ReproductionTable offdiagonal_section(const PipelineSettings& settings) {
  ReproductionTable t;
  t.section = "4-offdiagonal";
  t.columns = {"f", "h", "printed_a11", "computed_a11", "printed_a12", "computed_a12",
               "printed_a21", "computed_a21", "printed_a22", "computed_a22"};
  double worst = 0.0;
  double continuity = 0.0;
  double continuity_printed = 0.0;
  for (const auto& [f, h] : std::vector<std::pair<double, double>>{{2.0, 1.0}, {3.0, 1.0}, {5.0, 4.0}, {3.0, 2.0}}) {
    const auto r = offdiagonal_report(f, h, settings);
    t.all_converged = t.all_converged && r.table.metadata.converged;
    const double a11 = r.table.at(kE1, kE1).real();
    const double a12 = r.table.at(kE1, kE2).real();
    const double a21 = r.table.at(kE2, kE1).real();
    const double a22 = r.table.at(kE2, kE2).real();
    t.rows.push_back({f, h, r.printed_a11, a11, r.printed_a12, a12, r.printed_a21, a21, r.printed_a22, a22});
    worst = std::max({worst, std::abs(a11 - r.printed_a11), std::abs(a12 - r.printed_a12),
                      std::abs(a21 - r.printed_a21), std::abs(a22 - r.printed_a22)});
    continuity = std::max(continuity, std::abs(r.continuity_numeric - r.continuity_diagonal_numeric));
    continuity_printed = std::max(continuity_printed, std::abs(r.continuity_numeric - r.continuity_printed));
  }
  t.summary = {{"max_abs_delta_printed", worst},
               {"continuity_vs_diagonal_numeric", continuity},
               {"continuity_vs_printed_diagonal", continuity_printed}};
  return t;
}

ReproductionTable vanishing_section(std::uint64_t seed, const PipelineSettings& settings) {
  ReproductionTable t;
  t.section = "7";
  t.columns = {"sample", "max_abs_coefficient", "max_abs_pointwise", "convergence_delta"};
  InstanceSampler rng(seed);
  double worst = 0.0;
  for (int k = 0; k < 20; ++k) {
    const JInvariantMetric g1(rng.j_invariant(1));
    const JInvariantMetric g2(rng.j_invariant(1));
    const auto table = omega_complex(1, 0, 1, g1, g2, settings);
    t.all_converged = t.all_converged && table.metadata.converged;
    const ComplexSymbolContext ctx(1, 0, 1, g1, g2);
    const auto rule = pipeline_rule(2, settings);
    double pointwise = 0.0;
    for (std::size_t node = 0; node < rule.size(); ++node) {
      const auto jet = mixed_taylor_jet(ctx, rule.node(node));
      for (const auto& c : jet.coefficients()) {
        pointwise = std::max(pointwise, std::abs(c));
      }
    }
    t.rows.push_back({static_cast<double>(k), table.max_abs(), pointwise, table.metadata.convergence_delta});
    worst = std::max({worst, table.max_abs(), pointwise});
  }
  t.summary = {{"max_abs", worst}, {"seed", static_cast<double>(seed)}};
  return t;
}

ReproductionTable conjecture_section(int dim, std::uint64_t seed, const PipelineSettings& settings) {
  if (dim < 2 || dim % 2 != 0) throw DomainError("conjecture probe: dim must be even and >= 2");
  ReproductionTable t;
  t.section = "conjecture";
  t.columns = {"sample", "max_abs_coefficient", "convergence_delta", "converged"};
  InstanceSampler rng(seed);
  double worst = 0.0;
  for (int k = 0; k < 5; ++k) {
    const JInvariantMetric g1(rng.j_invariant(dim));
    const JInvariantMetric g2(rng.j_invariant(dim));
    const auto table = omega_complex(dim, dim / 2, dim - dim / 2, g1, g2, settings);
    t.all_converged = t.all_converged && table.metadata.converged;
    t.rows.push_back({static_cast<double>(k), table.max_abs(), table.metadata.convergence_delta,
                      table.metadata.converged ? 1.0 : 0.0});
    worst = std::max(worst, table.max_abs());
  }
  t.summary = {{"dim", static_cast<double>(dim)}, {"max_abs", worst}, {"seed", static_cast<double>(seed)}};
  return t;
}

}  // namespace

const std::vector<std::string>& reproduction_sections() {
  static const std::vector<std::string> names = {"4-diagonal", "4-offdiagonal", "7", "conjecture"};
  return names;
}

ReproductionTable reproduction_table(const std::string& section, int dim, std::uint64_t seed,
                                     const PipelineSettings& settings) {
  if (section == "4-diagonal") return diagonal_section(settings);
  if (section == "4-offdiagonal") return offdiagonal_section(settings);
  if (section == "7") return vanishing_section(seed, settings);
  if (section == "conjecture") return conjecture_section(dim, seed, settings);
  throw DomainError("unknown section '" + section + "'");
}

std::string to_json_text(const ReproductionTable& t) {
  nlohmann::json summary = nlohmann::json::object();
  for (const auto& [key, value] : t.summary) summary[key] = value;
  const nlohmann::json j = {{"section", t.section},
                            {"columns", t.columns},
                            {"rows", t.rows},
                            {"summary", summary},
                            {"all_converged", t.all_converged}};
  return j.dump(2) + "\n";
}

std::string to_csv_text(const ReproductionTable& t) {
  std::string out;
  for (const auto& [key, value] : t.summary) out += fmt::format("# {}={}\n", key, value);
  out += fmt::format("# all_converged={}\n", t.all_converged ? "true" : "false");
  out += fmt::format("{}\n", fmt::join(t.columns, ","));
  for (const auto& row : t.rows) out += fmt::format("{}\n", fmt::join(row, ","));
  return out;
}

}  // namespace dcinv
