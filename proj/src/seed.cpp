#include "stanley/seed.hpp"

#include <algorithm>
#include <optional>
#include <sstream>

#include "stanley/error.hpp"

namespace stanley {
namespace {

// Smallest k-term progression by (difference, first element), if any. Every
// progression is determined by its first two elements, so pairs suffice.
std::optional<std::vector<std::uint64_t>> find_progression(
    const std::vector<std::uint64_t>& sorted, int k) {
  std::optional<std::pair<std::uint64_t, std::uint64_t>> best;  // (d, first)
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    for (std::size_t j = i + 1; j < sorted.size(); ++j) {
      const std::uint64_t first = sorted[i];
      const std::uint64_t d = sorted[j] - first;
      if (best && std::pair{d, first} >= *best) continue;
      bool complete = true;
      std::uint64_t v = sorted[j];
      for (int step = 2; step < k && complete; ++step) {
        if (v > UINT64_MAX - d) {
          complete = false;
          break;
        }
        v += d;
        complete = std::binary_search(sorted.begin(), sorted.end(), v);
      }
      if (complete) best = std::pair{d, first};
    }
  }
  if (!best) return std::nullopt;
  std::vector<std::uint64_t> witness;
  for (int step = 0; step < k; ++step) witness.push_back(best->second + best->first * step);
  return witness;
}

SeedSet checked(std::vector<std::uint64_t> values, int k, auto make) {
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  if (auto witness = find_progression(values, k)) {
    std::ostringstream msg;
    msg << "seed contains a " << k << "-term progression (";
    for (std::size_t i = 0; i < witness->size(); ++i) msg << (i ? "," : "") << (*witness)[i];
    msg << ")";
    throw ProgressionError(std::move(*witness), msg.str());
  }
  return make(std::move(values));
}

void check_shape(std::size_t size, int k) {
  if (k < 3) throw Error(ErrorCode::bad_k, "k must be at least 3, got " + std::to_string(k));
  if (size == 0) throw Error(ErrorCode::empty_seed, "seed has no elements");
}

}  // namespace

SeedSet validate_seed(std::span<const std::int64_t> raw, int k) {
  check_shape(raw.size(), k);
  std::vector<std::uint64_t> values;
  values.reserve(raw.size());
  for (std::int64_t v : raw) {
    if (v < 0)
      throw Error(ErrorCode::negative_element, "seed element " + std::to_string(v) + " is negative");
    values.push_back(static_cast<std::uint64_t>(v));
  }
  return checked(std::move(values), k, [k](auto v) { return SeedSet(std::move(v), k); });
}

SeedSet validate_seed(std::span<const std::uint64_t> raw, int k) {
  check_shape(raw.size(), k);
  return checked(std::vector<std::uint64_t>(raw.begin(), raw.end()), k,
                 [k](auto v) { return SeedSet(std::move(v), k); });
}

}  // namespace stanley
