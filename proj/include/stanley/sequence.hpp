#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string_view>
#include <vector>

#include "stanley/bitset.hpp"
#include "stanley/seed.hpp"

namespace stanley {

enum class Engine { sieve, direct };

const char* to_string(Engine engine) noexcept;
Engine parse_engine(std::string_view name);

/// Ceiling on the bits either dense structure may occupy. Exceeding it
/// raises capacity_exceeded instead of attempting the allocation.
struct Limits {
  std::uint64_t max_bits = std::uint64_t{1} << 34;
};

class SequenceView;

/// Materialized prefix of S(A) together with the structures used to extend
/// it. Exclusively owned while generating; snapshot() for shared reads.
///
/// Completeness: every element of S(A) that is <= complete_to() is present
/// in terms(). This is at least the last term, and extend_to_bound(x) raises
/// it to x.
class SequenceState {
 public:
  SequenceState(SeedSet seed, Engine engine, Limits limits = {});

  /// Rebuilds generator structures from a saved prefix. Sieve marks are
  /// replayed pairwise.
  static SequenceState resume(const SequenceView& view, Engine engine, Limits limits = {});

  /// Appends and returns the least admissible integer above the scanned
  /// region. Throws overflow if the candidate would exceed 2^64 - 1 and
  /// capacity_exceeded if the structures would outgrow Limits; either way
  /// the state is left unchanged.
  std::uint64_t next_term();

  /// Generates every term <= x. No term > x is appended.
  void extend_to_bound(std::uint64_t x);

  /// Generates until terms().size() >= count.
  void extend_to_count(std::size_t count);

  /// True iff appending n keeps the terms k-free. Requires n > last term.
  bool is_admissible(std::uint64_t n) const;

  const SeedSet& seed() const noexcept { return seed_; }
  int k() const noexcept { return seed_.k(); }
  Engine engine() const noexcept { return engine_; }
  std::span<const std::uint64_t> terms() const noexcept { return terms_; }
  std::uint64_t last() const noexcept { return terms_.back(); }
  std::uint64_t complete_to() const noexcept;

  bool contains(std::uint64_t v) const noexcept { return membership_.test(v); }

  /// Sieve engine only; the direct engine keeps no forbidden set.
  bool is_forbidden(std::uint64_t v) const noexcept { return forbidden_.test(v); }
  bool has_forbidden_set() const noexcept { return engine_ == Engine::sieve; }

  std::uint64_t forbidden_bits() const noexcept { return forbidden_.size_bits(); }
  std::uint64_t membership_bits() const noexcept { return membership_.size_bits(); }

  SequenceView snapshot() const;

  /// Fault injection for negative-control testing: clears the forbidden mark
  /// on `v` and keeps it cleared from now on. Sieve engine only.
  void suppress_forbidden(std::uint64_t v);

 private:
  bool admissible_direct(std::uint64_t n) const;
  void mark_forbidden(std::uint64_t a);
  void reserve_for(std::uint64_t a);
  void append(std::uint64_t a);

  SeedSet seed_;
  Engine engine_;
  Limits limits_;
  std::vector<std::uint64_t> terms_;
  DenseBitset membership_;
  DenseBitset forbidden_;
  // Every candidate in (last, scanned_to_] has been rejected.
  std::uint64_t scanned_to_ = 0;
  std::vector<std::uint64_t> suppressed_;
};

namespace fault {
struct Access;
}

/// Immutable, cheaply copyable snapshot of a prefix. Safe to share across
/// threads. Carries the completeness bound that analysis checks against.
class SequenceView {
 public:
  /// Builds a view from an explicit prefix. Terms must be strictly
  /// increasing, begin with the seed and not exceed complete_to.
  SequenceView(SeedSet seed, std::vector<std::uint64_t> terms, std::uint64_t complete_to);

  const SeedSet& seed() const noexcept { return data_->seed; }
  int k() const noexcept { return data_->seed.k(); }
  std::span<const std::uint64_t> terms() const noexcept { return data_->terms; }
  std::uint64_t last() const noexcept { return data_->terms.back(); }
  std::uint64_t complete_to() const noexcept { return data_->complete_to; }
  bool contains(std::uint64_t v) const noexcept { return data_->membership.test(v); }

 private:
  friend class SequenceState;
  friend struct fault::Access;

  struct Data {
    SeedSet seed;
    std::vector<std::uint64_t> terms;
    DenseBitset membership;
    std::uint64_t complete_to;
  };

  explicit SequenceView(std::shared_ptr<const Data> data) : data_(std::move(data)) {}

  std::shared_ptr<const Data> data_;
};

}  // namespace stanley
