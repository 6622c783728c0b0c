#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "stanley/sequence.hpp"

namespace stanley {

/// H(S, n) over [lo, hi]. cumulative[i] is the sum of values[0..i], so it
/// equals the full sum up to hi when lo = 0.
struct HProfile {
  std::uint64_t lo = 0;
  std::uint64_t hi = 0;
  std::vector<std::uint64_t> values;
  std::vector<std::uint64_t> cumulative;
};

struct CountingSample {
  std::uint64_t x = 0;
  std::uint64_t count = 0;
  friend bool operator==(const CountingSample&, const CountingSample&) = default;
};

/// Samples of S(A, x) at strictly increasing x. seed_max is max A, which the
/// exact theorem floor needs.
struct CountingProfile {
  std::vector<CountingSample> samples;
  std::uint64_t seed_max = 0;
};

struct Gap {
  std::size_t index = 0;  // 1-based k in a_{k+1} - a_k
  std::uint64_t term = 0;  // a_k
  std::uint64_t gap = 0;
  friend bool operator==(const Gap&, const Gap&) = default;
};

struct GapStats {
  std::vector<Gap> gaps;
  Gap max_gap;  // first occurrence of the largest gap
  std::vector<Gap> records;  // gaps strictly larger than every earlier one
};

struct ExponentFit {
  std::vector<std::pair<double, double>> points;  // (log x, log count)
  double slope = 0;
  double intercept = 0;
  double residual = 0;  // root mean square of the fit residuals
};

enum class Inequality {
  membership_criterion,
  pair_bound,
  nonmember_bound,
  quadratic_bound,
  theorem_floor,
};

const char* to_string(Inequality which) noexcept;

struct Counterexample {
  std::uint64_t location = 0;
  // Signed so that the non-member bound can report a negative left side.
  // Values outside the int64 range saturate.
  std::int64_t lhs = 0;
  std::int64_t rhs = 0;
};

/// Outcome of checking one inequality over [range_lo, range_hi]. final_lhs
/// and final_rhs are the two sides at range_hi (or at the counterexample).
struct VerificationReport {
  Inequality inequality = Inequality::membership_criterion;
  std::uint64_t range_lo = 0;
  std::uint64_t range_hi = 0;
  bool vacuous = false;
  std::optional<Counterexample> counterexample;
  std::int64_t final_lhs = 0;
  std::int64_t final_rhs = 0;

  bool passed() const noexcept { return !counterexample.has_value(); }
};

struct TheoremCheck {
  double epsilon = 0;
  // Empirical, over the sampled range only: the smallest sampled x from
  // which every later sample satisfies S(A,x) >= (sqrt2 - eps) sqrt x.
  std::optional<std::uint64_t> x0_observed;
  // Exact form: every sample with x >= max A satisfies the integer floor.
  bool floor_holds = true;
  std::optional<std::uint64_t> first_floor_violation;
};

// All H-based operations require k = 3 and throw unsupported_k otherwise.

/// Number of pairs s1 < s2 in the prefix with n = 2 s2 - s1. Needs every
/// term below n, i.e. n <= complete_to() + 1.
std::uint64_t h_count(const SequenceView& view, std::uint64_t n);

HProfile h_profile(const SequenceView& view, std::uint64_t lo, std::uint64_t hi);

/// S(A, x) by binary search. Needs x <= complete_to().
std::uint64_t counting_function(const SequenceView& view, std::uint64_t x);

CountingProfile counting_profile(const SequenceView& view, std::span<const std::uint64_t> xs);

/// Geometric grid floor(base * ratio^j), j = 0, 1, ..., deduplicated, keeping
/// values in [min_x, max_x].
std::vector<std::uint64_t> geometric_grid(double base, double ratio, std::uint64_t max_x,
                                          std::uint64_t min_x = 2);

// Range verifiers. Each stops at the smallest counterexample.

/// H(n) = 0 iff n is a term, for max A < n <= n_hi.
VerificationReport verify_membership_criterion(const SequenceView& view, std::uint64_t n_hi);
/// sum_{n<=y} H(n) <= S(y)(S(y)-1)/2 for every y in [0, x].
VerificationReport verify_pair_bound(const SequenceView& view, std::uint64_t x);
/// #{n <= y : n not a term} - max A <= sum_{n<=y} H(n) for every y in [0, x].
VerificationReport verify_nonmember_bound(const SequenceView& view, std::uint64_t x);
/// y <= S(y)(S(y)+1)/2 + max A for every y in [0, x].
VerificationReport verify_quadratic_bound(const SequenceView& view, std::uint64_t x);
/// S(y) >= theorem_floor(y, max A) for every y in [max A, x].
VerificationReport verify_theorem_floor(const SequenceView& view, std::uint64_t x);

/// The four lemma checks followed by the floor check, all over [0, x].
std::vector<VerificationReport> verify_all(const SequenceView& view, std::uint64_t x);

/// Least s >= 0 with s(s+1)/2 + max_a >= x, in exact integer arithmetic.
/// Throws bad_input when x < max_a.
std::uint64_t theorem_floor(std::uint64_t x, std::uint64_t max_a);

/// Exact integer square root of a 128-bit value.
std::uint64_t isqrt(unsigned __int128 v) noexcept;

TheoremCheck theorem_check(const CountingProfile& profile, double epsilon);

GapStats gap_stats(const SequenceView& view);

/// Unweighted least squares of log count against log x over the samples
/// with x >= 2 and count >= 1.
ExponentFit exponent_fit(const CountingProfile& profile);

}  // namespace stanley
