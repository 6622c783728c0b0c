#include "stanley/sequence.hpp"

#include <algorithm>
#include <string>

#include "stanley/error.hpp"

namespace stanley {

const char* to_string(Engine engine) noexcept {
  return engine == Engine::sieve ? "sieve" : "direct";
}

Engine parse_engine(std::string_view name) {
  if (name == "sieve") return Engine::sieve;
  if (name == "direct") return Engine::direct;
  throw Error(ErrorCode::bad_input, "unknown engine '" + std::string(name) + "'");
}

SequenceState::SequenceState(SeedSet seed, Engine engine, Limits limits)
    : seed_(std::move(seed)),
      engine_(engine),
      limits_(limits),
      membership_(seed_.min()),
      forbidden_(seed_.min()) {
  const auto elems = seed_.elements();
  terms_.reserve(elems.size());
  terms_.push_back(elems.front());
  reserve_for(elems.front());
  membership_.set(elems.front());
  for (std::size_t i = 1; i < elems.size(); ++i) {
    reserve_for(elems[i]);
    append(elems[i]);
  }
  scanned_to_ = seed_.max();
}

SequenceState SequenceState::resume(const SequenceView& view, Engine engine, Limits limits) {
  SequenceState state(view.seed(), engine, limits);
  const auto terms = view.terms();
  for (std::size_t i = state.terms_.size(); i < terms.size(); ++i) {
    state.reserve_for(terms[i]);
    state.append(terms[i]);
  }
  state.scanned_to_ = view.complete_to();
  return state;
}

std::uint64_t SequenceState::complete_to() const noexcept {
  return std::max(terms_.back(), scanned_to_);
}

bool SequenceState::is_admissible(std::uint64_t n) const {
  if (n <= terms_.back())
    throw Error(ErrorCode::out_of_range, "candidate " + std::to_string(n) +
                                             " does not exceed the last term " +
                                             std::to_string(terms_.back()));
  if (engine_ == Engine::sieve) return !forbidden_.test(n);
  return admissible_direct(n);
}

bool SequenceState::admissible_direct(std::uint64_t n) const {
  const int k = seed_.k();
  if (k == 3) {
    // n = 2*s2 - s1 with 0 <= s1 < s2 < n forces n/2 <= s2.
    auto it = std::lower_bound(terms_.begin(), terms_.end(), n - n / 2);
    for (; it != terms_.end(); ++it) {
      if (membership_.test(2 * *it - n)) return false;
    }
    return true;
  }
  const std::uint64_t lo = seed_.min();
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const std::uint64_t d = n - *it;
    // Remaining elements n - j*d for j = 2..k-1 must all be >= lo.
    if ((*it - lo) / d < static_cast<std::uint64_t>(k - 2)) break;
    bool complete = true;
    std::uint64_t v = *it;
    for (int j = 2; j < k && complete; ++j) {
      v -= d;
      complete = membership_.test(v);
    }
    if (complete) return false;
  }
  return true;
}

void SequenceState::reserve_for(std::uint64_t a) {
  const std::uint64_t lo = seed_.min();
  auto need = [&](const DenseBitset& bits, std::uint64_t v) {
    const std::uint64_t n = bits.bits_needed_for(v);
    if (n > limits_.max_bits)
      throw Error(ErrorCode::capacity_exceeded,
                  "value " + std::to_string(v) + " needs " + std::to_string(n) +
                      " bits, above the limit of " + std::to_string(limits_.max_bits));
    return n;
  };
  need(membership_, a);
  std::uint64_t horizon = 0;
  if (engine_ == Engine::sieve) {
    // Largest mark is 2a - min, clipped to the 64-bit range.
    horizon = (a - lo > UINT64_MAX - a) ? UINT64_MAX : a + (a - lo);
    need(forbidden_, horizon);
  }
  membership_.grow_to_cover(a);
  if (engine_ == Engine::sieve) forbidden_.grow_to_cover(horizon);
}

void SequenceState::mark_forbidden(std::uint64_t a) {
  const int k = seed_.k();
  const std::uint64_t lo = seed_.min();
  if (k == 3 && a - lo <= UINT64_MAX - a) {
    // Iterating downwards makes the marks 2a - t increase.
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) forbidden_.set(2 * a - *it);
  } else {
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      const std::uint64_t d = a - *it;
      bool complete = true;
      std::uint64_t v = *it;
      for (int j = 2; j < k - 1 && complete; ++j) {
        if (v - lo < d) {
          complete = false;
          break;
        }
        v -= d;
        complete = membership_.test(v);
      }
      // Marks past 2^64 - 1 can never be reached by a candidate.
      if (complete && d <= UINT64_MAX - a) forbidden_.set(a + d);
    }
  }
  for (std::uint64_t v : suppressed_) forbidden_.reset(v);
}

void SequenceState::append(std::uint64_t a) {
  if (engine_ == Engine::sieve) mark_forbidden(a);
  terms_.push_back(a);
  membership_.set(a);
}

std::uint64_t SequenceState::next_term() {
  std::uint64_t n = complete_to();
  for (;;) {
    if (n == UINT64_MAX) {
      scanned_to_ = n;
      throw Error(ErrorCode::overflow, "next candidate exceeds the 64-bit range");
    }
    ++n;
    if (is_admissible(n)) {
      scanned_to_ = n - 1;
      reserve_for(n);
      append(n);
      return n;
    }
  }
}

void SequenceState::extend_to_bound(std::uint64_t x) {
  const std::uint64_t start = complete_to();
  if (x <= start) return;
  for (std::uint64_t n = start + 1;; ++n) {
    if (is_admissible(n)) {
      scanned_to_ = n - 1;
      reserve_for(n);
      append(n);
    }
    if (n == x) break;
  }
  scanned_to_ = x;
}

void SequenceState::extend_to_count(std::size_t count) {
  while (terms_.size() < count) next_term();
}

void SequenceState::suppress_forbidden(std::uint64_t v) {
  if (engine_ != Engine::sieve)
    throw Error(ErrorCode::bad_input, "the direct engine keeps no forbidden set");
  suppressed_.push_back(v);
  forbidden_.reset(v);
}

SequenceView SequenceState::snapshot() const {
  return SequenceView(std::make_shared<const SequenceView::Data>(
      SequenceView::Data{seed_, terms_, membership_, complete_to()}));
}

SequenceView::SequenceView(SeedSet seed, std::vector<std::uint64_t> terms,
                           std::uint64_t complete_to) {
  const auto elems = seed.elements();
  if (terms.size() < elems.size() || !std::equal(elems.begin(), elems.end(), terms.begin()))
    throw Error(ErrorCode::consistency_error, "terms do not begin with the seed elements");
  for (std::size_t i = 1; i < terms.size(); ++i) {
    if (terms[i] <= terms[i - 1])
      throw Error(ErrorCode::consistency_error,
                  "terms not strictly ascending at position " + std::to_string(i + 1));
  }
  if (complete_to < terms.back())
    throw Error(ErrorCode::consistency_error, "completeness bound is below the last term");
  DenseBitset membership(seed.min());
  if (membership.bits_needed_for(terms.back()) > Limits{}.max_bits)
    throw Error(ErrorCode::capacity_exceeded,
                "term " + std::to_string(terms.back()) + " is too large for a dense view");
  membership.grow_to_cover(terms.back());
  for (std::uint64_t t : terms) membership.set(t);
  data_ = std::make_shared<const Data>(
      Data{std::move(seed), std::move(terms), std::move(membership), complete_to});
}

}  // namespace stanley
