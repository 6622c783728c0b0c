#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace stanley {

/// A validated finite k-free set of nonnegative integers: the starting set
/// of a Stanley sequence. Elements are sorted and distinct.
class SeedSet {
 public:
  std::span<const std::uint64_t> elements() const noexcept { return elements_; }
  int k() const noexcept { return k_; }
  std::uint64_t min() const noexcept { return elements_.front(); }
  std::uint64_t max() const noexcept { return elements_.back(); }
  std::size_t size() const noexcept { return elements_.size(); }

  friend bool operator==(const SeedSet&, const SeedSet&) = default;

 private:
  friend SeedSet validate_seed(std::span<const std::int64_t> raw, int k);
  friend SeedSet validate_seed(std::span<const std::uint64_t> raw, int k);

  SeedSet(std::vector<std::uint64_t> elements, int k)
      : elements_(std::move(elements)), k_(k) {}

  std::vector<std::uint64_t> elements_;
  int k_ = 3;
};

/// Sorts and deduplicates `raw`, then checks it is nonempty, nonnegative and
/// free of k-term progressions. Throws Error (empty_seed, negative_element,
/// bad_k) or ProgressionError.
SeedSet validate_seed(std::span<const std::int64_t> raw, int k = 3);
SeedSet validate_seed(std::span<const std::uint64_t> raw, int k = 3);

inline SeedSet validate_seed(std::initializer_list<std::int64_t> raw, int k = 3) {
  return validate_seed(std::span<const std::int64_t>(raw.begin(), raw.size()), k);
}

}  // namespace stanley
