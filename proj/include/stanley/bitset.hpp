#pragma once

#include <cstdint>
#include <vector>

namespace stanley {

/// Growable dense bitset over the value window [base, base + size_bits()).
/// Queries outside the window read as unset.
class DenseBitset {
 public:
  DenseBitset() = default;
  explicit DenseBitset(std::uint64_t base) : base_(base) {}

  std::uint64_t base() const noexcept { return base_; }
  std::uint64_t size_bits() const noexcept { return words_.size() * 64; }

  /// Largest value representable without growing. Only meaningful when
  /// size_bits() > 0.
  std::uint64_t last_covered() const noexcept { return base_ + size_bits() - 1; }

  bool covers(std::uint64_t v) const noexcept {
    return v >= base_ && v - base_ < size_bits();
  }

  bool test(std::uint64_t v) const noexcept {
    if (!covers(v)) return false;
    const std::uint64_t off = v - base_;
    return (words_[off >> 6] >> (off & 63)) & 1u;
  }

  /// `v` must be covered.
  void set(std::uint64_t v) noexcept {
    const std::uint64_t off = v - base_;
    words_[off >> 6] |= std::uint64_t{1} << (off & 63);
  }

  void reset(std::uint64_t v) noexcept {
    if (!covers(v)) return;
    const std::uint64_t off = v - base_;
    words_[off >> 6] &= ~(std::uint64_t{1} << (off & 63));
  }

  /// Number of bits the window must hold to cover `v`, or 0 if already covered.
  std::uint64_t bits_needed_for(std::uint64_t v) const noexcept {
    if (covers(v)) return 0;
    const std::uint64_t want = v - base_ + 1;
    std::uint64_t bits = size_bits() == 0 ? 64 : size_bits();
    while (bits < want) {
      if (bits > (UINT64_MAX >> 1)) return want;
      bits <<= 1;
    }
    return bits;
  }

  /// Grows (by doubling) until `v` is covered. `v` must be >= base().
  void grow_to_cover(std::uint64_t v) {
    const std::uint64_t bits = bits_needed_for(v);
    if (bits == 0) return;
    words_.resize(static_cast<std::size_t>((bits + 63) / 64), 0);
  }

  std::uint64_t memory_bytes() const noexcept { return words_.capacity() * 8; }

 private:
  std::uint64_t base_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace stanley
