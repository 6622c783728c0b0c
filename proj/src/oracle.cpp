#include "stanley/oracle.hpp"

#include <algorithm>

#include "stanley/error.hpp"

namespace stanley::oracle {
namespace {

bool completes_progression(const std::vector<std::uint64_t>& terms, std::uint64_t n, int k) {
  for (std::uint64_t t : terms) {
    const std::uint64_t d = n - t;
    bool all = true;
    std::uint64_t v = t;
    for (int j = 2; j < k && all; ++j) {
      if (v < d) {
        all = false;
        break;
      }
      v -= d;
      all = std::binary_search(terms.begin(), terms.end(), v);
    }
    if (all) return true;
  }
  return false;
}

template <typename Done>
OracleSequence run(const SeedSet& seed, Done&& done) {
  OracleSequence out;
  out.terms.assign(seed.elements().begin(), seed.elements().end());
  std::uint64_t n = out.terms.back();
  for (;;) {
    if (n == UINT64_MAX) throw Error(ErrorCode::overflow, "naive generator ran past 2^64 - 1");
    ++n;
    if (done(n, out.terms)) break;
    if (!completes_progression(out.terms, n, seed.k())) out.terms.push_back(n);
  }
  return out;
}

}  // namespace

OracleSequence naive_extend(const SeedSet& seed, std::uint64_t x) {
  // Like the engines, the seed itself is never truncated.
  if (x <= seed.max()) return OracleSequence{{seed.elements().begin(), seed.elements().end()}};
  return run(seed, [x](std::uint64_t n, const auto&) { return n > x; });
}

OracleSequence naive_first(const SeedSet& seed, std::size_t count) {
  if (count <= seed.size()) return OracleSequence{{seed.elements().begin(), seed.elements().end()}};
  return run(seed, [count](std::uint64_t, const auto& terms) { return terms.size() >= count; });
}

OracleSequence digit_terms(std::uint64_t x) {
  OracleSequence out;
  out.provenance = Provenance::digit_form;
  // The i-th term reads the binary digits of i in base 3.
  for (std::uint64_t i = 0;; ++i) {
    unsigned __int128 value = 0;
    unsigned __int128 place = 1;
    for (std::uint64_t bits = i; bits; bits >>= 1, place *= 3) {
      if (bits & 1) value += place;
    }
    if (value > x) break;
    out.terms.push_back(static_cast<std::uint64_t>(value));
  }
  return out;
}

}  // namespace stanley::oracle
