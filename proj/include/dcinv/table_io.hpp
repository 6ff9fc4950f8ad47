#pragma once

#include <cstdint>
#include <string>

#include <Eigen/Dense>

#include "dcinv/invariant_pipeline.hpp"

namespace dcinv {

enum class OutputFormat { kJson, kCsv };

const char* to_string(OutputFormat format);
// Inverse of the to_string functions; DomainError on anything else.
FormMode form_mode_from(const std::string& text);
Convention convention_from(const std::string& text);
Route route_from(const std::string& text);
OutputFormat output_format_from(const std::string& text);

// Everything a compute run needs. Metrics are kept as shorthand strings so
// a config file reproduces the run exactly.
struct RunConfig {
  FormMode mode = FormMode::kReal;
  int dim = 2;
  int m = -1;  // -1: dim / 2
  int p = -1;  // -1: dim / 2
  int q = -1;  // -1: dim - p
  std::string g1 = "identity";
  std::string g2 = "identity";
  Route route = Route::kJet;
  int circle_nodes = 512;
  int sphere_level = 32;
  int convergence_factor = 2;
  double convergence_tolerance = 1e-9;
  bool certify = true;
  bool metric_unit_sphere = false;
  OutputFormat format = OutputFormat::kJson;
  Convention convention = Convention::kD;
  std::uint64_t seed = 7;
  std::size_t threads = 0;

  int degree() const { return m < 0 ? dim / 2 : m; }
  int holomorphic_degree() const { return p < 0 ? dim / 2 : p; }
  int antiholomorphic_degree() const { return q < 0 ? dim - holomorphic_degree() : q; }
  PipelineSettings settings() const;

  friend bool operator==(const RunConfig&, const RunConfig&) = default;
};

// JSON object whose keys are the CLI long flag names.
std::string config_to_text(const RunConfig& config);
// Missing keys keep their defaults; unknown keys are a DomainError.
RunConfig config_from_text(const std::string& text);

// identity | scale:<l> | diag:<v1,...> | file:<path>, giving a size x size
// matrix. Files hold size * size numbers, row-major, separated by
// whitespace or commas. DomainError on malformed input; symmetry and
// definiteness are left to the metric constructors.
Eigen::MatrixXd parse_metric(const std::string& spec, int size);

// {"mode", "dim", "degree" | "bidegree", "convention", "coeffs": [{"a", "b",
// "re", "im"}], "metadata": {...}}. Doubles are written with round-trip
// precision.
std::string table_to_json(const CoefficientTable& table);
CoefficientTable table_from_json(const std::string& text);

// Comment lines "# key=value" with the shape, then a header
// "a,b,re,im" and one row per entry, multi-indices dash-joined.
std::string table_to_csv(const CoefficientTable& table);
CoefficientTable table_from_csv(const std::string& text);

}  // namespace dcinv
