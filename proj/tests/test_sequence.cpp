#include <random>

#include "corpus.hpp"
#include "doctest.h"
#include "stanley/error.hpp"
#include "stanley/oracle.hpp"
#include "stanley/sequence.hpp"
#include "support/brute.hpp"

using stanley::Engine;
using stanley::ErrorCode;
using stanley::SequenceState;
using stanley::validate_seed;
using Terms = std::vector<std::uint64_t>;

namespace {

Terms terms_of(const SequenceState& s) { return {s.terms().begin(), s.terms().end()}; }

SequenceState make(std::initializer_list<std::int64_t> seed, Engine e = Engine::sieve, int k = 3) {
  return SequenceState(validate_seed(seed, k), e);
}

}  // namespace

TEST_CASE("new_state") {
  auto s = make({0, 1});
  CHECK(terms_of(s) == Terms{0, 1});
  CHECK(s.is_forbidden(2));
  CHECK(s.complete_to() == 1);

  auto single = make({0});
  CHECK(terms_of(single) == Terms{0});
  for (std::uint64_t v = 0; v < 64; ++v) CHECK_FALSE(single.is_forbidden(v));

  auto direct = make({0, 4}, Engine::direct);
  CHECK(terms_of(direct) == Terms{0, 4});
  CHECK_FALSE(direct.has_forbidden_set());
  CHECK(direct.forbidden_bits() == 0);
}

TEST_CASE("next_term") {
  for (Engine e : {Engine::sieve, Engine::direct}) {
    CAPTURE(stanley::to_string(e));
    auto s = make({0, 1}, e);
    CHECK(s.next_term() == 3);

    auto t = make({0, 1, 3, 4}, e);
    CHECK(t.next_term() == 9);

    auto u = make({0}, e);
    CHECK(u.next_term() == 1);
  }
}

TEST_CASE("extend_to_bound") {
  for (Engine e : {Engine::sieve, Engine::direct}) {
    CAPTURE(stanley::to_string(e));
    auto s = make({0, 1}, e);
    s.extend_to_bound(10);
    CHECK(terms_of(s) == Terms{0, 1, 3, 4, 9, 10});
    CHECK(s.complete_to() == 10);

    auto t = make({0, 4}, e);
    t.extend_to_bound(4);
    CHECK(terms_of(t) == Terms{0, 4});

    auto u = make({0}, e);
    u.extend_to_bound(27);
    CHECK(terms_of(u) == Terms{0, 1, 3, 4, 9, 10, 12, 13, 27});

    // Scanned but empty tail still counts as complete.
    auto w = make({0, 4}, e);
    w.extend_to_bound(10);
    CHECK(terms_of(w) == Terms{0, 4, 5, 7});
    CHECK(w.complete_to() == 10);
    CHECK(w.next_term() == 11);
  }
}

TEST_CASE("is_admissible") {
  for (Engine e : {Engine::sieve, Engine::direct}) {
    CAPTURE(stanley::to_string(e));
    auto s = make({0, 1, 3, 4}, e);
    CHECK_FALSE(s.is_admissible(5));
    CHECK(s.is_admissible(9));
    for (std::uint64_t g = 5; g < 9; ++g) CHECK_FALSE(s.is_admissible(g));

    auto single = make({0}, e);
    CHECK(single.is_admissible(1'000'000));

    try {
      (void)s.is_admissible(4);
      FAIL("n must exceed the last term");
    } catch (const stanley::Error& err) {
      CHECK(err.code() == ErrorCode::out_of_range);
    }
    CHECK(terms_of(s) == Terms{0, 1, 3, 4});
  }
}

TEST_CASE("sieve forbidden set matches its definition") {
  auto s = make({0, 4});
  s.extend_to_bound(300);
  const auto t = terms_of(s);
  for (std::uint64_t n = 0; n <= 2 * t.back(); ++n) {
    bool expect = false;
    for (std::size_t i = 0; i < t.size() && !expect; ++i)
      for (std::size_t j = i + 1; j < t.size() && !expect; ++j) expect = (2 * t[j] - t[i] == n);
    CHECK_MESSAGE(s.is_forbidden(n) == expect, "n = " << n);
  }
  CHECK(s.forbidden_bits() >= 2 * t.back() + 1);
}

TEST_CASE("engines agree with the brute-force greedy on the corpus") {
  for (const auto& raw : kCorpus) {
    auto seed = validate_seed(std::span<const std::int64_t>(raw));
    SequenceState sieve(seed, Engine::sieve), direct(seed, Engine::direct);
    sieve.extend_to_bound(2000);
    direct.extend_to_bound(2000);
    const Terms expect = brute::greedy({seed.elements().begin(), seed.elements().end()}, 3, 2000);
    CHECK(terms_of(sieve) == expect);
    CHECK(terms_of(direct) == expect);
  }
}

TEST_CASE("first terms of S({0,4}) and S({0,1,5})") {
  auto s = make({0, 4});
  s.extend_to_count(20);
  CHECK(terms_of(s) == Terms{0, 4, 5, 7, 11, 12, 16, 23, 26, 31, 33, 37, 38, 44, 49, 56, 73, 78, 80, 85});
  auto t = make({0, 1, 5});
  t.extend_to_count(20);
  CHECK(terms_of(t) == Terms{0, 1, 5, 6, 8, 13, 14, 17, 19, 31, 35, 36, 40, 42, 46, 47, 60, 68, 82, 95});
}

TEST_CASE("k = 4 engines") {
  auto sieve = make({0}, Engine::sieve, 4);
  auto direct = make({0}, Engine::direct, 4);
  sieve.extend_to_count(200);
  direct.extend_to_count(200);
  CHECK(terms_of(sieve) == terms_of(direct));
  CHECK(sieve.last() == 952);
  const Terms head(sieve.terms().begin(), sieve.terms().begin() + 12);
  CHECK(head == Terms{0, 1, 2, 4, 5, 7, 8, 9, 14, 15, 16, 18});
  CHECK(brute::is_k_free(sieve.terms(), 4));
}

TEST_CASE("k = 5 engines agree with brute force") {
  auto seed = validate_seed({0, 3}, 5);
  SequenceState sieve(seed, Engine::sieve), direct(seed, Engine::direct);
  sieve.extend_to_bound(400);
  direct.extend_to_bound(400);
  const Terms expect = brute::greedy({0, 3}, 5, 400);
  CHECK(terms_of(sieve) == expect);
  CHECK(terms_of(direct) == expect);
}

TEST_CASE("property: random seeds, both engines, k-free and greedy-minimal") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 60; ++trial) {
    const int k = trial % 3 == 2 ? 4 : 3;
    const auto raw = brute::random_seed(rng, k, 60, 5);
    auto seed = validate_seed(std::span<const std::int64_t>(raw), k);
    SequenceState sieve(seed, Engine::sieve), direct(seed, Engine::direct);
    sieve.extend_to_bound(600);
    direct.extend_to_bound(600);
    const auto t = terms_of(sieve);
    REQUIRE(t == terms_of(direct));

    // Seed prefix.
    CHECK(std::equal(seed.elements().begin(), seed.elements().end(), t.begin()));
    CHECK(brute::is_k_free(t, k));

    // Every skipped integer above the seed is inadmissible against its prefix.
    SequenceState replay(seed, Engine::direct);
    for (std::size_t i = seed.size(); i < t.size(); ++i) {
      for (std::uint64_t g = replay.last() + 1; g < t[i]; ++g) CHECK_FALSE(replay.is_admissible(g));
      CHECK(replay.next_term() == t[i]);
    }
  }
}

TEST_CASE("property: extension is monotone and deterministic") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<std::uint64_t> bound(0, 3000);
  for (int trial = 0; trial < 20; ++trial) {
    const auto raw = brute::random_seed(rng, 3, 50, 4);
    auto seed = validate_seed(std::span<const std::int64_t>(raw));
    std::uint64_t x1 = bound(rng), x2 = bound(rng);
    if (x1 > x2) std::swap(x1, x2);
    SequenceState stepwise(seed, Engine::sieve), once(seed, Engine::sieve);
    stepwise.extend_to_bound(x1);
    stepwise.extend_to_bound(x2);
    once.extend_to_bound(x2);
    CHECK(terms_of(stepwise) == terms_of(once));
    CHECK(stepwise.complete_to() == once.complete_to());

    // Count- and bound-driven generation land on the same prefix.
    SequenceState by_count(seed, Engine::sieve);
    by_count.extend_to_count(once.terms().size());
    CHECK(terms_of(by_count) == terms_of(once));
  }
}

TEST_CASE("resume rebuilds the generator") {
  for (Engine e : {Engine::sieve, Engine::direct}) {
    auto s = make({0, 4}, e);
    s.extend_to_bound(1000);
    auto resumed = SequenceState::resume(s.snapshot(), e);
    CHECK(resumed.complete_to() == 1000);
    s.extend_to_bound(5000);
    resumed.extend_to_bound(5000);
    CHECK(terms_of(s) == terms_of(resumed));
  }
}

TEST_CASE("overflow halts with the prefix intact") {
  for (Engine e : {Engine::sieve, Engine::direct}) {
    CAPTURE(stanley::to_string(e));
    const std::uint64_t x = UINT64_MAX - 2;
    SequenceState s(validate_seed(std::span<const std::uint64_t>(std::vector<std::uint64_t>{x})), e);
    CHECK(s.next_term() == x + 1);
    // x + 2 closes (x, x+1, x+2); x + 3 does not exist.
    try {
      s.next_term();
      FAIL("expected overflow");
    } catch (const stanley::Error& err) {
      CHECK(err.code() == ErrorCode::overflow);
    }
    CHECK(terms_of(s) == Terms{x, x + 1});
    CHECK_THROWS_AS(s.next_term(), stanley::Error);
    CHECK(terms_of(s) == Terms{x, x + 1});
  }
}

TEST_CASE("capacity limit is reported, not allocated") {
  stanley::Limits tiny{1 << 10};
  auto seed = validate_seed({0});
  SequenceState s(seed, Engine::sieve, tiny);
  try {
    s.extend_to_bound(100000);
    FAIL("expected capacity_exceeded");
  } catch (const stanley::Error& err) {
    CHECK(err.code() == ErrorCode::capacity_exceeded);
  }
  CHECK(brute::is_k_free(s.terms(), 3));
  CHECK(s.forbidden_bits() <= tiny.max_bits);

  CHECK_THROWS_AS(SequenceState(validate_seed({0, std::int64_t{1} << 40}), Engine::sieve), stanley::Error);
}

TEST_CASE("suppress_forbidden injects a fault") {
  auto s = make({0, 1});
  s.suppress_forbidden(5);
  s.extend_to_bound(10);
  CHECK(terms_of(s) == Terms{0, 1, 3, 4, 5});
  CHECK_THROWS_AS(make({0}, Engine::direct).suppress_forbidden(5), stanley::Error);
}

TEST_CASE("views are immutable snapshots") {
  auto s = make({0, 1});
  s.extend_to_bound(10);
  const auto view = s.snapshot();
  s.extend_to_bound(100);
  CHECK(view.terms().size() == 6);
  CHECK(view.complete_to() == 10);
  CHECK(view.contains(9));
  CHECK_FALSE(view.contains(27));

  CHECK_THROWS_AS(stanley::SequenceView(validate_seed({0, 1}), Terms{0, 1, 1}, 5), stanley::Error);
  CHECK_THROWS_AS(stanley::SequenceView(validate_seed({0, 1}), Terms{1, 3}, 5), stanley::Error);
  CHECK_THROWS_AS(stanley::SequenceView(validate_seed({0, 1}), Terms{0, 1, 3}, 2), stanley::Error);
}
