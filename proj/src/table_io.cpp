#include "dcinv/table_io.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include <fmt/format.h>
#include <json.hpp>

#include "dcinv/errors.hpp"

namespace dcinv {

using nlohmann::json;

const char* to_string(OutputFormat format) { return format == OutputFormat::kJson ? "json" : "csv"; }

namespace {

template <class E>
E from_text(const std::string& text, std::initializer_list<E> values, const char* what) {
  for (E v : values) {
    if (text == to_string(v)) return v;
  }
  std::string allowed;
  for (E v : values) allowed += std::string(allowed.empty() ? "" : ", ") + to_string(v);
  throw DomainError(fmt::format("unknown {} '{}' (expected one of: {})", what, text, allowed));
}

}  // namespace

FormMode form_mode_from(const std::string& text) {
  return from_text(text, {FormMode::kReal, FormMode::kComplex}, "mode");
}
Convention convention_from(const std::string& text) {
  return from_text(text, {Convention::kD, Convention::kPartial}, "convention");
}
Route route_from(const std::string& text) {
  return from_text(text, {Route::kJet, Route::kDirectSum, Route::kClosedForm}, "route");
}
OutputFormat output_format_from(const std::string& text) {
  return from_text(text, {OutputFormat::kJson, OutputFormat::kCsv}, "format");
}

PipelineSettings RunConfig::settings() const {
  PipelineSettings s;
  s.circle_nodes = circle_nodes;
  s.sphere_level = sphere_level;
  s.convergence_factor = convergence_factor;
  s.convergence_tolerance = convergence_tolerance;
  s.certify = certify;
  s.metric_unit_sphere = metric_unit_sphere;
  s.threads = threads;
  return s;
}

std::string config_to_text(const RunConfig& c) {
  const json j = {{"mode", to_string(c.mode)},
                  {"dim", c.dim},
                  {"degree", c.m},
                  {"p", c.p},
                  {"q", c.q},
                  {"g1", c.g1},
                  {"g2", c.g2},
                  {"route", to_string(c.route)},
                  {"circle-nodes", c.circle_nodes},
                  {"level", c.sphere_level},
                  {"convergence-factor", c.convergence_factor},
                  {"tolerance", c.convergence_tolerance},
                  {"certify", c.certify},
                  {"metric-unit-sphere", c.metric_unit_sphere},
                  {"format", to_string(c.format)},
                  {"convention", to_string(c.convention)},
                  {"seed", c.seed},
                  {"threads", c.threads}};
  return j.dump(2) + "\n";
}

RunConfig config_from_text(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw DomainError(std::string("config: ") + e.what());
  }
  if (!j.is_object()) throw DomainError("config: expected a JSON object");
  RunConfig c;
  try {
    for (const auto& [key, value] : j.items()) {
      if (key == "mode") {
        c.mode = form_mode_from(value.get<std::string>());
      } else if (key == "dim") {
        c.dim = value.get<int>();
      } else if (key == "degree") {
        c.m = value.get<int>();
      } else if (key == "p") {
        c.p = value.get<int>();
      } else if (key == "q") {
        c.q = value.get<int>();
      } else if (key == "g1") {
        c.g1 = value.get<std::string>();
      } else if (key == "g2") {
        c.g2 = value.get<std::string>();
      } else if (key == "route") {
        c.route = route_from(value.get<std::string>());
      } else if (key == "circle-nodes") {
        c.circle_nodes = value.get<int>();
      } else if (key == "level") {
        c.sphere_level = value.get<int>();
      } else if (key == "convergence-factor") {
        c.convergence_factor = value.get<int>();
      } else if (key == "tolerance") {
        c.convergence_tolerance = value.get<double>();
      } else if (key == "certify") {
        c.certify = value.get<bool>();
      } else if (key == "metric-unit-sphere") {
        c.metric_unit_sphere = value.get<bool>();
      } else if (key == "format") {
        c.format = output_format_from(value.get<std::string>());
      } else if (key == "convention") {
        c.convention = convention_from(value.get<std::string>());
      } else if (key == "seed") {
        c.seed = value.get<std::uint64_t>();
      } else if (key == "threads") {
        c.threads = value.get<std::size_t>();
      } else {
        throw DomainError("config: unknown key '" + key + "'");
      }
    }
  } catch (const json::exception& e) {
    throw DomainError(std::string("config: ") + e.what());
  }
  return c;
}

namespace {

std::vector<double> parse_numbers(const std::string& text, const std::string& what) {
  std::string cleaned = text;
  for (char& ch : cleaned) {
    if (ch == ',') ch = ' ';
  }
  std::istringstream in(cleaned);
  std::vector<double> out;
  std::string token;
  while (in >> token) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(token, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != token.size()) throw DomainError(what + ": '" + token + "' is not a number");
    out.push_back(v);
  }
  return out;
}

}  // namespace

Eigen::MatrixXd parse_metric(const std::string& spec, int size) {
  if (size < 1) throw DomainError("metric: size must be positive");
  const auto colon = spec.find(':');
  const std::string kind = spec.substr(0, colon);
  const std::string arg = colon == std::string::npos ? "" : spec.substr(colon + 1);
  if (kind == "identity" && colon == std::string::npos) return Eigen::MatrixXd::Identity(size, size);
  if (kind == "scale") {
    const auto v = parse_numbers(arg, "metric '" + spec + "'");
    if (v.size() != 1) throw DomainError("metric '" + spec + "': scale takes one number");
    return v[0] * Eigen::MatrixXd::Identity(size, size);
  }
  if (kind == "diag") {
    const auto v = parse_numbers(arg, "metric '" + spec + "'");
    if (static_cast<int>(v.size()) != size) {
      throw DomainError(fmt::format("metric '{}': diag needs {} entries, got {}", spec, size, v.size()));
    }
    return Eigen::Map<const Eigen::VectorXd>(v.data(), size).asDiagonal();
  }
  if (kind == "file") {
    std::ifstream in(arg);
    if (!in) throw DomainError("metric '" + spec + "': cannot read " + arg);
    std::stringstream buffer;
    buffer << in.rdbuf();
    const auto v = parse_numbers(buffer.str(), "metric file " + arg);
    if (static_cast<int>(v.size()) != size * size) {
      throw DomainError(fmt::format("metric file {}: needs {} numbers, got {}", arg, size * size, v.size()));
    }
    Eigen::MatrixXd g(size, size);
    for (int r = 0; r < size; ++r) {
      for (int c = 0; c < size; ++c) g(r, c) = v[static_cast<std::size_t>(r * size + c)];
    }
    return g;
  }
  throw DomainError("metric '" + spec + "': expected identity, scale:<l>, diag:<v1,...> or file:<path>");
}

namespace {

json entries_json(const std::vector<CoefficientEntry>& entries) {
  json out = json::array();
  for (const auto& e : entries) {
    // + 0.0 turns a negative zero into zero.
    out.push_back({{"a", e.a}, {"b", e.b}, {"re", e.value.real() + 0.0}, {"im", e.value.imag() + 0.0}});
  }
  return out;
}

std::vector<CoefficientEntry> entries_from(const json& j) {
  std::vector<CoefficientEntry> out;
  for (const auto& e : j) {
    out.push_back({e.at("a").get<MultiIndex>(), e.at("b").get<MultiIndex>(),
                   Complex(e.at("re").get<double>(), e.at("im").get<double>())});
  }
  return out;
}

// (-i)^N for the convention note; N = |a| + |b| is the same for all entries.
Complex partial_factor(int order) {
  Complex out(1.0, 0.0);
  for (int k = 0; k < order; ++k) out *= Complex(0.0, -1.0);
  return out;
}

}  // namespace

std::string table_to_json(const CoefficientTable& t) {
  const auto& md = t.metadata;
  json j;
  j["mode"] = to_string(t.mode);
  j["dim"] = t.n;
  if (t.mode == FormMode::kReal) {
    j["degree"] = t.m;
  } else {
    j["bidegree"] = {t.p, t.q};
  }
  j["convention"] = to_string(t.convention);
  j["coeffs"] = entries_json(t.entries);
  const Complex factor = partial_factor(t.order());
  j["metadata"] = {
      {"route", to_string(md.route)},
      {"quadrature",
       {{"rule", md.rule},
        {"nodes", md.nodes},
        {"circle_nodes", md.circle_nodes},
        {"sphere_level", md.sphere_level},
        {"convergence_factor", md.convergence_factor},
        {"metric_unit_sphere", md.metric_unit_sphere},
        {"preconditioned", md.preconditioned},
        {"certified", md.certified},
        {"check_rule", md.check_rule},
        {"check_nodes", md.check_nodes},
        {"check_coeffs", entries_json(md.check_entries)}}},
      {"convergence_delta", md.convergence_delta},
      {"convergence_tolerance", md.convergence_tolerance},
      {"converged", md.converged},
      {"convention", to_string(t.convention)},
      {"partial_over_D", {{"re", factor.real()}, {"im", factor.imag()}}},
      {"g1_fingerprint", md.g1_fingerprint},
      {"g2_fingerprint", md.g2_fingerprint},
      {"wall_seconds", md.wall_seconds},
      {"warnings", md.warnings}};
  return j.dump(2) + "\n";
}

CoefficientTable table_from_json(const std::string& text) {
  CoefficientTable t;
  try {
    const json j = json::parse(text);
    t.mode = form_mode_from(j.at("mode").get<std::string>());
    t.n = j.at("dim").get<int>();
    if (t.mode == FormMode::kReal) {
      t.m = j.at("degree").get<int>();
    } else {
      t.p = j.at("bidegree").at(0).get<int>();
      t.q = j.at("bidegree").at(1).get<int>();
    }
    t.convention = convention_from(j.at("convention").get<std::string>());
    t.entries = entries_from(j.at("coeffs"));
    const json& md = j.at("metadata");
    const json& quad = md.at("quadrature");
    auto& out = t.metadata;
    out.route = route_from(md.at("route").get<std::string>());
    out.rule = quad.at("rule").get<std::string>();
    out.nodes = quad.at("nodes").get<std::size_t>();
    out.circle_nodes = quad.at("circle_nodes").get<int>();
    out.sphere_level = quad.at("sphere_level").get<int>();
    out.convergence_factor = quad.at("convergence_factor").get<int>();
    out.metric_unit_sphere = quad.at("metric_unit_sphere").get<bool>();
    out.preconditioned = quad.at("preconditioned").get<bool>();
    out.certified = quad.at("certified").get<bool>();
    out.check_rule = quad.at("check_rule").get<std::string>();
    out.check_nodes = quad.at("check_nodes").get<std::size_t>();
    out.check_entries = entries_from(quad.at("check_coeffs"));
    out.convergence_delta = md.at("convergence_delta").get<double>();
    out.convergence_tolerance = md.at("convergence_tolerance").get<double>();
    out.converged = md.at("converged").get<bool>();
    out.g1_fingerprint = md.at("g1_fingerprint").get<std::string>();
    out.g2_fingerprint = md.at("g2_fingerprint").get<std::string>();
    out.wall_seconds = md.at("wall_seconds").get<double>();
    out.warnings = md.at("warnings").get<std::vector<std::string>>();
  } catch (const json::exception& e) {
    throw DomainError(std::string("table json: ") + e.what());
  }
  return t;
}

namespace {

std::string dash_joined(const MultiIndex& alpha) {
  std::string out;
  for (std::size_t k = 0; k < alpha.size(); ++k) out += (k ? "-" : "") + std::to_string(alpha[k]);
  return out;
}

MultiIndex dash_split(const std::string& text) {
  MultiIndex out;
  std::istringstream in(text);
  std::string part;
  while (std::getline(in, part, '-')) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(part, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (part.empty() || used != part.size()) throw DomainError("table csv: bad multi-index '" + text + "'");
    out.push_back(v);
  }
  return out;
}

}  // namespace

std::string table_to_csv(const CoefficientTable& t) {
  std::string out;
  out += fmt::format("# mode={}\n# dim={}\n", to_string(t.mode), t.n);
  if (t.mode == FormMode::kReal) {
    out += fmt::format("# degree={}\n", t.m);
  } else {
    out += fmt::format("# p={}\n# q={}\n", t.p, t.q);
  }
  out += fmt::format("# convention={}\n# convergence_delta={}\n# converged={}\n", to_string(t.convention),
                     t.metadata.convergence_delta, t.metadata.converged ? "true" : "false");
  out += "a,b,re,im\n";
  for (const auto& e : t.entries) {
    out += fmt::format("{},{},{},{}\n", dash_joined(e.a), dash_joined(e.b), e.value.real() + 0.0, e.value.imag() + 0.0);
  }
  return out;
}

CoefficientTable table_from_csv(const std::string& text) {
  CoefficientTable t;
  std::map<std::string, std::string> header;
  std::istringstream in(text);
  std::string line;
  bool columns = false;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (line.rfind("# ", 0) == 0) {
      const auto eq = line.find('=');
      if (eq == std::string::npos) throw DomainError("table csv: bad comment line '" + line + "'");
      header[line.substr(2, eq - 2)] = line.substr(eq + 1);
      continue;
    }
    if (!columns) {
      if (line != "a,b,re,im") throw DomainError("table csv: expected header a,b,re,im");
      columns = true;
      continue;
    }
    std::istringstream row(line);
    std::string a, b, re, im;
    if (!std::getline(row, a, ',') || !std::getline(row, b, ',') || !std::getline(row, re, ',') ||
        !std::getline(row, im)) {
      throw DomainError("table csv: short row '" + line + "'");
    }
    try {
      t.entries.push_back({dash_split(a), dash_split(b), Complex(std::stod(re), std::stod(im))});
    } catch (const std::invalid_argument&) {
      throw DomainError("table csv: bad number in '" + line + "'");
    }
  }
  const auto need = [&](const char* key) -> const std::string& {
    const auto it = header.find(key);
    if (it == header.end()) throw DomainError(std::string("table csv: missing '# ") + key + "='");
    return it->second;
  };
  t.mode = form_mode_from(need("mode"));
  t.n = std::stoi(need("dim"));
  if (t.mode == FormMode::kReal) {
    t.m = std::stoi(need("degree"));
  } else {
    t.p = std::stoi(need("p"));
    t.q = std::stoi(need("q"));
  }
  t.convention = convention_from(need("convention"));
  t.metadata.convergence_delta = std::stod(need("convergence_delta"));
  t.metadata.converged = need("converged") == "true";
  return t;
}

}  // namespace dcinv
