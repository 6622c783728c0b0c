#pragma once

// Slow reference generators. They share no code or data structures with the
// engines in sequence.hpp: a sorted vector and binary search only.

#include <cstdint>
#include <vector>

#include "stanley/seed.hpp"

namespace stanley::oracle {

enum class Provenance { naive_greedy, digit_form };

struct OracleSequence {
  std::vector<std::uint64_t> terms;
  Provenance provenance = Provenance::naive_greedy;
};

/// Greedy recursion, re-testing every candidate against the whole prefix.
/// Returns every term <= x.
OracleSequence naive_extend(const SeedSet& seed, std::uint64_t x);

/// Same recursion, stopping after `count` terms.
OracleSequence naive_first(const SeedSet& seed, std::size_t count);

/// Integers <= x whose base-3 digits are all 0 or 1, ascending. Matches
/// S({0}) only in the range validated by the test suite (up to 3^7).
OracleSequence digit_terms(std::uint64_t x);

}  // namespace stanley::oracle
