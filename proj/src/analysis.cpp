#include "stanley/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "stanley/error.hpp"

namespace stanley {
namespace {

using i128 = __int128;

std::int64_t saturate(i128 v) {
  constexpr i128 hi = std::numeric_limits<std::int64_t>::max();
  constexpr i128 lo = std::numeric_limits<std::int64_t>::min();
  return static_cast<std::int64_t>(std::clamp(v, lo, hi));
}

void require_k3(const SequenceView& view, const char* op) {
  if (view.k() != 3)
    throw Error(ErrorCode::unsupported_k, std::string(op) + " is defined for 3-term progressions only; view has k = " +
                                              std::to_string(view.k()));
}

void require_complete(const SequenceView& view, std::uint64_t x) {
  if (x > view.complete_to())
    throw Error(ErrorCode::incomplete_prefix, "prefix is complete only to " +
                                                  std::to_string(view.complete_to()) +
                                                  ", requested " + std::to_string(x));
}

// H(n) from the terms index and membership bits; no precondition checks.
std::uint64_t h_unchecked(const SequenceView& view, std::uint64_t n) {
  const auto terms = view.terms();
  // s1 = 2 s2 - n >= 0 and s1 < s2 give n/2 <= s2 < n.
  auto first = std::lower_bound(terms.begin(), terms.end(), n - n / 2);
  auto last = std::lower_bound(first, terms.end(), n);
  std::uint64_t count = 0;
  for (auto it = first; it != last; ++it) count += view.contains(2 * *it - n);
  return count;
}

// Walks y = 0, 1, ..., x keeping S(y), counted from the terms index, and the
// running sum of H.
template <typename Step>
void sweep(const SequenceView& view, std::uint64_t x, bool with_h, Step&& step) {
  const auto terms = view.terms();
  std::size_t next = 0;
  std::uint64_t h_sum = 0;
  for (std::uint64_t y = 0;; ++y) {
    while (next < terms.size() && terms[next] <= y) ++next;
    if (with_h) h_sum += h_unchecked(view, y);
    if (!step(y, next, h_sum) || y == x) break;
  }
}

VerificationReport make_report(Inequality which, std::uint64_t lo, std::uint64_t hi) {
  VerificationReport r;
  r.inequality = which;
  r.range_lo = lo;
  r.range_hi = hi;
  r.vacuous = lo > hi;
  return r;
}

// Records the sides at y and a counterexample if they fail.
bool record(VerificationReport& r, std::uint64_t y, i128 lhs, i128 rhs, bool ok) {
  r.final_lhs = saturate(lhs);
  r.final_rhs = saturate(rhs);
  if (!ok) r.counterexample = Counterexample{y, r.final_lhs, r.final_rhs};
  return ok;
}

}  // namespace

const char* to_string(Inequality which) noexcept {
  switch (which) {
    case Inequality::membership_criterion: return "membership-criterion";
    case Inequality::pair_bound: return "pair-bound";
    case Inequality::nonmember_bound: return "nonmember-bound";
    case Inequality::quadratic_bound: return "quadratic-bound";
    case Inequality::theorem_floor: return "theorem-floor";
  }
  return "unknown";
}

std::uint64_t h_count(const SequenceView& view, std::uint64_t n) {
  require_k3(view, "h_count");
  if (n > 0) require_complete(view, n - 1);
  return h_unchecked(view, n);
}

HProfile h_profile(const SequenceView& view, std::uint64_t lo, std::uint64_t hi) {
  require_k3(view, "h_profile");
  if (lo > hi) throw Error(ErrorCode::empty_range, "empty range [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
  if (hi > 0) require_complete(view, hi - 1);
  HProfile p;
  p.lo = lo;
  p.hi = hi;
  p.values.reserve(hi - lo + 1);
  p.cumulative.reserve(hi - lo + 1);
  std::uint64_t sum = 0;
  for (std::uint64_t n = lo;; ++n) {
    const std::uint64_t h = h_unchecked(view, n);
    sum += h;
    p.values.push_back(h);
    p.cumulative.push_back(sum);
    if (n == hi) break;
  }
  return p;
}

std::uint64_t counting_function(const SequenceView& view, std::uint64_t x) {
  require_complete(view, x);
  const auto terms = view.terms();
  return static_cast<std::uint64_t>(std::upper_bound(terms.begin(), terms.end(), x) - terms.begin());
}

CountingProfile counting_profile(const SequenceView& view, std::span<const std::uint64_t> xs) {
  CountingProfile profile;
  profile.seed_max = view.seed().max();
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i > 0 && xs[i] <= xs[i - 1])
      throw Error(ErrorCode::bad_input, "sample points must be strictly increasing");
    profile.samples.push_back({xs[i], counting_function(view, xs[i])});
  }
  return profile;
}

std::vector<std::uint64_t> geometric_grid(double base, double ratio, std::uint64_t max_x,
                                          std::uint64_t min_x) {
  if (!(base > 0) || !(ratio > 1))
    throw Error(ErrorCode::bad_input, "grid needs base > 0 and ratio > 1");
  std::vector<std::uint64_t> xs;
  long double v = base;
  const long double cap = static_cast<long double>(max_x);
  while (std::floor(v) <= cap) {
    const auto x = static_cast<std::uint64_t>(std::floor(v));
    if (x >= min_x && (xs.empty() || x > xs.back())) xs.push_back(x);
    v *= ratio;
  }
  return xs;
}

VerificationReport verify_membership_criterion(const SequenceView& view, std::uint64_t n_hi) {
  require_k3(view, "verify_membership_criterion");
  require_complete(view, n_hi);
  const std::uint64_t max_a = view.seed().max();
  auto r = make_report(Inequality::membership_criterion, max_a + 1, n_hi);
  for (std::uint64_t n = max_a + 1; n <= n_hi; ++n) {
    const std::uint64_t h = h_unchecked(view, n);
    const bool member = view.contains(n);
    if (!record(r, n, h, member, (h == 0) == member)) break;
    if (n == UINT64_MAX) break;
  }
  return r;
}

VerificationReport verify_pair_bound(const SequenceView& view, std::uint64_t x) {
  require_k3(view, "verify_pair_bound");
  require_complete(view, x);
  auto r = make_report(Inequality::pair_bound, 0, x);
  sweep(view, x, true, [&](std::uint64_t y, std::uint64_t k, std::uint64_t h_sum) {
    const i128 rhs = static_cast<i128>(k) * (static_cast<i128>(k) - 1) / 2;
    return record(r, y, h_sum, rhs, h_sum <= rhs);
  });
  return r;
}

VerificationReport verify_nonmember_bound(const SequenceView& view, std::uint64_t x) {
  require_k3(view, "verify_nonmember_bound");
  require_complete(view, x);
  const i128 max_a = view.seed().max();
  auto r = make_report(Inequality::nonmember_bound, 0, x);
  sweep(view, x, true, [&](std::uint64_t y, std::uint64_t k, std::uint64_t h_sum) {
    const i128 lhs = static_cast<i128>(y) + 1 - k - max_a;
    return record(r, y, lhs, h_sum, lhs <= h_sum);
  });
  return r;
}

VerificationReport verify_quadratic_bound(const SequenceView& view, std::uint64_t x) {
  require_k3(view, "verify_quadratic_bound");
  require_complete(view, x);
  const i128 max_a = view.seed().max();
  auto r = make_report(Inequality::quadratic_bound, 0, x);
  sweep(view, x, false, [&](std::uint64_t y, std::uint64_t k, std::uint64_t) {
    const i128 rhs = static_cast<i128>(k) * (static_cast<i128>(k) + 1) / 2 + max_a;
    return record(r, y, y, rhs, y <= rhs);
  });
  return r;
}

VerificationReport verify_theorem_floor(const SequenceView& view, std::uint64_t x) {
  require_k3(view, "verify_theorem_floor");
  require_complete(view, x);
  const std::uint64_t max_a = view.seed().max();
  auto r = make_report(Inequality::theorem_floor, max_a, x);
  if (r.vacuous) return r;
  sweep(view, x, false, [&](std::uint64_t y, std::uint64_t k, std::uint64_t) {
    if (y < max_a) return true;
    const std::uint64_t floor = theorem_floor(y, max_a);
    return record(r, y, k, floor, k >= floor);
  });
  return r;
}

std::vector<VerificationReport> verify_all(const SequenceView& view, std::uint64_t x) {
  return {verify_membership_criterion(view, x), verify_pair_bound(view, x),
          verify_nonmember_bound(view, x), verify_quadratic_bound(view, x),
          verify_theorem_floor(view, x)};
}

std::uint64_t isqrt(unsigned __int128 v) noexcept {
  std::uint64_t lo = 0;
  std::uint64_t hi = UINT64_MAX;
  while (lo < hi) {
    const std::uint64_t mid = lo + (hi - lo) / 2 + 1;
    if (static_cast<unsigned __int128>(mid) * mid <= v)
      lo = mid;
    else
      hi = mid - 1;
  }
  return lo;
}

std::uint64_t theorem_floor(std::uint64_t x, std::uint64_t max_a) {
  if (x < max_a)
    throw Error(ErrorCode::bad_input, "theorem_floor needs x >= max A (" + std::to_string(x) +
                                          " < " + std::to_string(max_a) + ")");
  // Least s with s(s+1) >= 2(x - max_a); it is isqrt or isqrt + 1.
  using u128 = unsigned __int128;
  const u128 target = static_cast<u128>(x - max_a) * 2;
  const std::uint64_t root = isqrt(target);
  for (std::uint64_t s = root >= 2 ? root - 2 : 0; s <= root + 2; ++s) {
    if (static_cast<u128>(s) * (static_cast<u128>(s) + 1) >= target) return s;
  }
  return root + 2;  // unreachable
}

TheoremCheck theorem_check(const CountingProfile& profile, double epsilon) {
  const double sqrt2 = std::sqrt(2.0);
  if (!(epsilon > 0) || !(epsilon < sqrt2))
    throw Error(ErrorCode::bad_epsilon, "epsilon must lie in (0, sqrt 2), got " + std::to_string(epsilon));
  if (profile.samples.empty()) throw Error(ErrorCode::too_few_samples, "counting profile is empty");
  TheoremCheck check;
  check.epsilon = epsilon;
  const double c = sqrt2 - epsilon;
  for (auto it = profile.samples.rbegin(); it != profile.samples.rend(); ++it) {
    if (static_cast<double>(it->count) < c * std::sqrt(static_cast<double>(it->x))) break;
    check.x0_observed = it->x;
  }
  for (const auto& s : profile.samples) {
    if (s.x < profile.seed_max) continue;
    if (s.count < theorem_floor(s.x, profile.seed_max)) {
      check.floor_holds = false;
      check.first_floor_violation = s.x;
      break;
    }
  }
  return check;
}

GapStats gap_stats(const SequenceView& view) {
  const auto terms = view.terms();
  if (terms.size() < 2) throw Error(ErrorCode::too_short, "gap statistics need at least two terms");
  GapStats stats;
  stats.gaps.reserve(terms.size() - 1);
  for (std::size_t i = 0; i + 1 < terms.size(); ++i) {
    const Gap g{i + 1, terms[i], terms[i + 1] - terms[i]};
    stats.gaps.push_back(g);
    if (stats.records.empty() || g.gap > stats.records.back().gap) {
      stats.records.push_back(g);
      stats.max_gap = g;
    }
  }
  return stats;
}

ExponentFit exponent_fit(const CountingProfile& profile) {
  ExponentFit fit;
  for (const auto& s : profile.samples) {
    if (s.x >= 2 && s.count >= 1)
      fit.points.emplace_back(std::log(static_cast<double>(s.x)), std::log(static_cast<double>(s.count)));
  }
  const std::size_t n = fit.points.size();
  if (n < 3)
    throw Error(ErrorCode::too_few_samples, "exponent fit needs at least 3 samples with x >= 2 and count >= 1");
  double mx = 0, my = 0;
  for (auto [lx, ly] : fit.points) {
    mx += lx;
    my += ly;
  }
  mx /= n;
  my /= n;
  double sxx = 0, sxy = 0;
  for (auto [lx, ly] : fit.points) {
    sxx += (lx - mx) * (lx - mx);
    sxy += (lx - mx) * (ly - my);
  }
  if (sxx == 0) throw Error(ErrorCode::degenerate_samples, "all sample points share the same x");
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  double ss = 0;
  for (auto [lx, ly] : fit.points) {
    const double e = ly - (fit.intercept + fit.slope * lx);
    ss += e * e;
  }
  fit.residual = std::sqrt(ss / n);
  return fit;
}

}  // namespace stanley
