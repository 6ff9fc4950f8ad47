#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "dcinv/invariant_pipeline.hpp"

namespace dcinv {

// Side-by-side table of printed closed forms and computed values, or of
// probe results over seeded random metrics.
struct ReproductionTable {
  std::string section;
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
  std::vector<std::pair<std::string, double>> summary;
  bool all_converged = true;
};

// 4-diagonal | 4-offdiagonal | 7 | conjecture. `dim` is used by the
// conjecture probe only (even, >= 2). DomainError for any other section.
ReproductionTable reproduction_table(const std::string& section, int dim, std::uint64_t seed,
                                     const PipelineSettings& settings = {});
const std::vector<std::string>& reproduction_sections();

std::string to_json_text(const ReproductionTable& table);
std::string to_csv_text(const ReproductionTable& table);

}  // namespace dcinv
