#include "dcinv/jet.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <utility>

namespace dcinv {

int total_degree(std::span<const int> alpha) {
  return std::accumulate(alpha.begin(), alpha.end(), 0);
}

double multi_factorial(std::span<const int> alpha) {
  double f = 1.0;
  for (int a : alpha) {
    for (int k = 2; k <= a; ++k) f *= k;
  }
  return f;
}

std::string to_string(std::span<const int> alpha) {
  std::string s = "(";
  for (std::size_t i = 0; i < alpha.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(alpha[i]);
  }
  return s + ")";
}

namespace {

// Appends every exponent vector of total degree `remaining` over variables
// [var, nvars), x_var power descending.
void enumerate(int var, int remaining, std::vector<int>& current, std::vector<int>& out) {
  const int nvars = static_cast<int>(current.size());
  if (var == nvars - 1) {
    current[var] = remaining;
    out.insert(out.end(), current.begin(), current.end());
    return;
  }
  for (int e = remaining; e >= 0; --e) {
    current[var] = e;
    enumerate(var + 1, remaining - e, current, out);
  }
  current[var] = 0;
}

}  // namespace

std::shared_ptr<const MonomialTable> MonomialTable::get(int nvars, int cap) {
  static std::mutex mutex;
  static std::map<std::pair<int, int>, std::shared_ptr<const MonomialTable>> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto& slot = cache[{nvars, cap}];
  if (!slot) slot = std::make_shared<const MonomialTable>(nvars, cap);
  return slot;
}

MonomialTable::MonomialTable(int nvars, int cap) : nvars_(nvars), cap_(cap) {
  if (nvars < 1 || nvars > kMaxVars || cap < 0 || cap > kMaxCap) {
    throw DomainError("monomial table: need 1 <= nvars <= 16 and 0 <= cap <= 15, got nvars=" +
                      std::to_string(nvars) + " cap=" + std::to_string(cap));
  }
  std::vector<int> current(static_cast<std::size_t>(nvars), 0);
  for (int d = 0; d <= cap; ++d) {
    degree_offsets_.push_back(exponents_.size() / static_cast<std::size_t>(nvars));
    enumerate(0, d, current, exponents_);
  }
  const std::size_t count = exponents_.size() / static_cast<std::size_t>(nvars);
  degree_offsets_.push_back(count);
  degrees_.resize(count);
  for (int d = 0; d <= cap; ++d) {
    for (std::size_t k = degree_offsets_[d]; k < degree_offsets_[d + 1]; ++k) degrees_[k] = d;
  }
  lookup_.reserve(count);
  for (std::size_t k = 0; k < count; ++k) {
    lookup_.emplace(pack(exponent(k)), static_cast<std::uint32_t>(k));
  }

  row_offsets_.reserve(count + 1);
  row_offsets_.push_back(0);
  std::vector<int> sum(static_cast<std::size_t>(nvars));
  for (std::size_t i = 0; i < count; ++i) {
    const std::size_t limit = degree_offsets_[cap - degrees_[i] + 1];
    const auto ei = exponent(i);
    for (std::size_t j = 0; j < limit; ++j) {
      const auto ej = exponent(j);
      for (int v = 0; v < nvars; ++v) sum[v] = ei[v] + ej[v];
      targets_.push_back(lookup_.at(pack(sum)));
    }
    row_offsets_.push_back(targets_.size());
  }
}

std::size_t MonomialTable::degree_begin(int d) const {
  if (d <= 0) return 0;
  if (d > cap_) return size();
  return degree_offsets_[static_cast<std::size_t>(d)];
}

std::uint64_t MonomialTable::pack(std::span<const int> alpha) {
  std::uint64_t key = 0;
  for (std::size_t i = 0; i < alpha.size(); ++i) {
    key |= static_cast<std::uint64_t>(alpha[i]) << (4 * i);
  }
  return key;
}

std::ptrdiff_t MonomialTable::find(std::span<const int> alpha) const {
  if (static_cast<int>(alpha.size()) != nvars_) return -1;
  int degree = 0;
  for (int a : alpha) {
    if (a < 0) return -1;
    degree += a;
  }
  if (degree > cap_) return -1;
  const auto it = lookup_.find(pack(alpha));
  return it == lookup_.end() ? -1 : static_cast<std::ptrdiff_t>(it->second);
}

}  // namespace dcinv
