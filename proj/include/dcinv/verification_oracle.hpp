#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "dcinv/ring.hpp"

namespace dcinv {

// kPaperFormula: reference is a printed closed form. kOracle: reference comes
// from an independent brute-force computation. kCrossPipeline: two engine
// routes compared against each other.
enum class Provenance { kPaperFormula, kOracle, kCrossPipeline };
enum class Verdict { kPass, kFail, kInformational };

const char* to_string(Provenance source);
const char* to_string(Verdict verdict);

struct VerificationCase {
  std::string id;
  std::string formula;  // coverage key
  std::string description;
  Provenance source = Provenance::kOracle;
  Complex computed;
  Complex reference;
  double abs_error = 0.0;
  double rel_error = 0.0;
  double tolerance = 0.0;  // on abs_error / max(1, |reference|)
  Verdict verdict = Verdict::kPass;
  std::string discrepancy;  // stable ID when a printed value disagrees
};

struct CoverageEntry {
  std::string formula;
  std::size_t cases = 0;
};

struct VerificationReport {
  std::string suite;
  std::uint64_t seed = 0;
  std::vector<VerificationCase> cases;

  std::size_t count(Verdict verdict) const;
  bool passed() const { return count(Verdict::kFail) == 0; }
  // Sorted, without repeats.
  std::vector<std::string> discrepancies() const;
  // Formulas in order of first appearance, with case counts.
  std::vector<CoverageEntry> coverage() const;
};

// Dense traces against the closed trace formulas, the trace and
// anticommutator identities, and the combinatorial constants. max_n <= 8.
VerificationReport verify_trace_formulas(int max_n, int samples, std::uint64_t seed);
// Jet coefficients against finite differences and the printed derivatives.
VerificationReport verify_jets(int samples, std::uint64_t seed);
// Circle and sphere rules against closed-form integrals and Monte Carlo.
VerificationReport verify_quadrature(std::uint64_t seed);
// Coefficient tables: oracles, route agreement, invariances, printed tables.
VerificationReport verify_pipeline(std::uint64_t seed);

// traces | jets | quadrature | pipeline | all, at default sizes. DomainError
// for any other name.
VerificationReport run_suite(const std::string& suite, std::uint64_t seed);
const std::vector<std::string>& suite_names();

// Deterministic JSON text: cases in order, summary, discrepancies, coverage.
std::string to_json_text(const VerificationReport& report);
VerificationReport report_from_json_text(const std::string& text);

}  // namespace dcinv
