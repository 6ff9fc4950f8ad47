#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "dcinv/errors.hpp"
#include "dcinv/invariant_pipeline.hpp"
#include "dcinv/reproduction.hpp"
#include "dcinv/table_io.hpp"
#include "dcinv/verification_oracle.hpp"

namespace {

using namespace dcinv;

// Exit codes.
constexpr int kOk = 0;
constexpr int kVerificationFailed = 1;
constexpr int kInvalidInput = 2;
constexpr int kNotConverged = 3;
constexpr int kInternalError = 4;

class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void emit(const std::string& text, const std::string& path) {
  if (path.empty() || path == "-") {
    std::fwrite(text.data(), 1, text.size(), stdout);
    return;
  }
  std::ofstream out(path);
  if (!out) throw InputError("cannot write " + path);
  out << text;
}

// --config is read before the flags are bound, so the file supplies the
// defaults and explicit flags override them.
std::string config_path(int argc, char** argv) {
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg == "--config" && i + 1 < argc) return argv[i + 1];
    if (arg.rfind("--config=", 0) == 0) return arg.substr(9);
  }
  return {};
}

std::string metric_diagnostic(const std::string& which, const std::string& spec, const MetricError& e) {
  return fmt::format("invalid metric {} '{}': {} ({})", which, spec, to_string(e.violation()), e.what());
}

CoefficientTable run_compute(const RunConfig& c) {
  if (c.dim < 1) throw InputError("--dim must be positive");
  const PipelineSettings settings = c.settings();
  const int size = c.mode == FormMode::kReal ? c.dim : 2 * c.dim;
  const Eigen::MatrixXd m1 = parse_metric(c.g1, size);
  const Eigen::MatrixXd m2 = parse_metric(c.g2, size);
  CoefficientTable table;
  if (c.mode == FormMode::kReal) {
    if (c.m >= 0 && c.m != c.dim / 2) throw InputError("--degree must be the middle degree dim / 2");
    std::optional<DualMetric> g1;
    std::optional<DualMetric> g2;
    try {
      g1.emplace(m1);
    } catch (const MetricError& e) {
      throw InputError(metric_diagnostic("g1", c.g1, e));
    }
    try {
      g2.emplace(m2);
    } catch (const MetricError& e) {
      throw InputError(metric_diagnostic("g2", c.g2, e));
    }
    switch (c.route) {
      case Route::kJet:
        table = omega_real(c.dim, *g1, *g2, settings);
        break;
      case Route::kDirectSum:
        table = omega_direct_sum(c.dim, *g1, *g2, settings);
        break;
      case Route::kClosedForm:
        table = omega_closed_form(c.dim, *g1, *g2, settings);
        break;
    }
  } else {
    std::optional<JInvariantMetric> g1;
    std::optional<JInvariantMetric> g2;
    try {
      g1.emplace(m1);
    } catch (const MetricError& e) {
      throw InputError(metric_diagnostic("g1", c.g1, e));
    }
    try {
      g2.emplace(m2);
    } catch (const MetricError& e) {
      throw InputError(metric_diagnostic("g2", c.g2, e));
    }
    const int p = c.holomorphic_degree();
    const int q = c.antiholomorphic_degree();
    switch (c.route) {
      case Route::kJet:
        table = omega_complex(c.dim, p, q, *g1, *g2, settings);
        break;
      case Route::kDirectSum:
        table = omega_direct_sum(c.dim, p, q, *g1, *g2, settings);
        break;
      case Route::kClosedForm:
        table = omega_closed_form(c.dim, p, q, *g1, *g2, settings);
        break;
    }
  }
  return table.in_convention(c.convention);
}

struct ComputeArgs {
  RunConfig config;
  std::string mode;
  std::string route;
  std::string format;
  std::string convention;
  std::string pq;
  std::string output;
  std::string config_file;
  std::string write_config;
};

void bind_settings(CLI::App* cmd, RunConfig& c) {
  cmd->add_option("--circle-nodes", c.circle_nodes, "Circle rule nodes for dimension 2")->capture_default_str();
  cmd->add_option("--level", c.sphere_level, "Sphere rule level for dimension >= 3")->capture_default_str();
  cmd->add_option("--convergence-factor", c.convergence_factor, "Resolution factor of the certification rerun")
      ->capture_default_str();
  cmd->add_option("--tolerance", c.convergence_tolerance, "Convergence tolerance relative to max(1, max |A|)")
      ->capture_default_str();
  cmd->add_option("--certify", c.certify, "Rerun at the refined resolution and compare (true|false)")
      ->capture_default_str();
  cmd->add_option("--threads", c.threads, "Worker threads (0: DCINV_THREADS or hardware)")->capture_default_str();
}

void parse_pq(const std::string& text, RunConfig& c) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) throw InputError("--pq expects p,q");
  try {
    c.p = std::stoi(text.substr(0, comma));
    c.q = std::stoi(text.substr(comma + 1));
  } catch (const std::exception&) {
    throw InputError("--pq expects two integers, got '" + text + "'");
  }
}

int compute_command(ComputeArgs& args) {
  RunConfig& c = args.config;
  c.mode = form_mode_from(args.mode);
  c.route = route_from(args.route);
  c.format = output_format_from(args.format);
  c.convention = convention_from(args.convention);
  if (!args.pq.empty()) parse_pq(args.pq, c);
  if (!args.write_config.empty()) emit(config_to_text(c), args.write_config);
  const auto table = run_compute(c);
  emit(c.format == OutputFormat::kJson ? table_to_json(table) : table_to_csv(table), args.output);
  if (!table.metadata.converged) {
    for (const auto& w : table.metadata.warnings) std::cerr << "dcinv: " << w << "\n";
    return kNotConverged;
  }
  return kOk;
}

int verify_command(const std::string& suite, std::uint64_t seed, const std::string& output) {
  const auto report = run_suite(suite, seed);
  emit(to_json_text(report), output);
  std::cerr << fmt::format("dcinv verify {}: {} pass, {} fail, {} informational\n", suite,
                           report.count(Verdict::kPass), report.count(Verdict::kFail),
                           report.count(Verdict::kInformational));
  for (const auto& c : report.cases) {
    if (c.verdict == Verdict::kFail) std::cerr << "  FAIL " << c.id << "\n";
  }
  return report.passed() ? kOk : kVerificationFailed;
}

int paper_command(const std::string& section, int dim, std::uint64_t seed, const RunConfig& c,
                  const std::string& format, const std::string& output) {
  const auto out_format = output_format_from(format);
  const auto table = reproduction_table(section, dim, seed, c.settings());
  emit(out_format == OutputFormat::kJson ? to_json_text(table) : to_csv_text(table), output);
  return table.all_converged ? kOk : kNotConverged;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Double conformal invariant coefficient tables for constant metrics"};
  app.require_subcommand(1);

  ComputeArgs compute;
  const std::string preset = config_path(argc, argv);
  try {
    if (!preset.empty()) compute.config = config_from_text(read_file(preset));
  } catch (const std::exception& e) {
    std::cerr << "dcinv: " << e.what() << "\n";
    return kInvalidInput;
  }
  RunConfig& c = compute.config;
  compute.mode = to_string(c.mode);
  compute.route = to_string(c.route);
  compute.format = to_string(c.format);
  compute.convention = to_string(c.convention);

  auto* cmd_compute = app.add_subcommand("compute", "Compute a coefficient table");
  cmd_compute->add_option("--config", compute.config_file, "JSON run config; flags override its fields");
  cmd_compute->add_option("--write-config", compute.write_config, "Write the effective run config to a file");
  cmd_compute->add_option("--mode", compute.mode, "real | complex")->capture_default_str();
  cmd_compute->add_option("--dim", c.dim, "n: real dimension, or complex dimension")->capture_default_str();
  cmd_compute->add_option("--degree", c.m, "Real form degree (must be dim / 2)");
  cmd_compute->add_option("--pq", compute.pq, "Complex bidegree p,q with p + q = dim, q >= 1");
  cmd_compute->add_option("--g1", c.g1, "identity | scale:<l> | diag:<v,...> | file:<path>")->capture_default_str();
  cmd_compute->add_option("--g2", c.g2, "identity | scale:<l> | diag:<v,...> | file:<path>")->capture_default_str();
  cmd_compute->add_option("--route", compute.route, "jet | direct-sum | closed-form")->capture_default_str();
  cmd_compute->add_option("--metric-unit-sphere", c.metric_unit_sphere,
                          "Project nodes onto |xi|_{g1} = 1 (true|false)")
      ->capture_default_str();
  cmd_compute->add_option("--format", compute.format, "json | csv")->capture_default_str();
  cmd_compute->add_option("--convention", compute.convention, "D | partial")->capture_default_str();
  cmd_compute->add_option("--seed", c.seed, "Seed recorded in the config")->capture_default_str();
  cmd_compute->add_option("-o,--output", compute.output, "Output file (default stdout)");
  bind_settings(cmd_compute, c);

  std::string suite = "all";
  std::uint64_t verify_seed = 7;
  std::string verify_output;
  auto* cmd_verify = app.add_subcommand("verify", "Run verification suites");
  cmd_verify->add_option("--suite", suite, "traces | jets | quadrature | pipeline | all")->capture_default_str();
  cmd_verify->add_option("--seed", verify_seed, "RNG seed")->capture_default_str();
  cmd_verify->add_option("-o,--output", verify_output, "Report file (default stdout)");

  std::string section;
  int paper_dim = 2;
  std::uint64_t paper_seed = 7;
  std::string paper_format = "json";
  std::string paper_output;
  RunConfig paper_config;
  auto* cmd_paper = app.add_subcommand("paper", "Printed closed forms against computed tables");
  cmd_paper->add_option("--section", section, "4-diagonal | 4-offdiagonal | 7 | conjecture")->required();
  cmd_paper->add_option("--dim", paper_dim, "Complex dimension for the conjecture probe")->capture_default_str();
  cmd_paper->add_option("--seed", paper_seed, "RNG seed for sampled metrics")->capture_default_str();
  cmd_paper->add_option("--format", paper_format, "json | csv")->capture_default_str();
  cmd_paper->add_option("-o,--output", paper_output, "Output file (default stdout)");
  bind_settings(cmd_paper, paper_config);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInvalidInput;
  }

  try {
    if (cmd_compute->parsed()) return compute_command(compute);
    if (cmd_verify->parsed()) return verify_command(suite, verify_seed, verify_output);
    if (cmd_paper->parsed()) {
      return paper_command(section, paper_dim, paper_seed, paper_config, paper_format, paper_output);
    }
  } catch (const InputError& e) {
    std::cerr << "dcinv: " << e.what() << "\n";
    return kInvalidInput;
  } catch (const MetricError& e) {
    std::cerr << "dcinv: invalid metric: " << to_string(e.violation()) << " (" << e.what() << ")\n";
    return kInvalidInput;
  } catch (const DomainError& e) {
    std::cerr << "dcinv: " << e.what() << "\n";
    return kInvalidInput;
  } catch (const ShapeError& e) {
    std::cerr << "dcinv: " << e.what() << "\n";
    return kInvalidInput;
  } catch (const std::exception& e) {
    std::cerr << "dcinv: internal error: " << e.what() << "\n";
    return kInternalError;
  }
  return kInvalidInput;
}
