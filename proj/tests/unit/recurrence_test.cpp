#include <random>
#include <vector>

#include "doctest.h"

#include "gib/recurrence.hpp"
#include "oracles.hpp"

using gib::i64;
using gib::modulus;
using gib::state_vector;

namespace {

std::vector<i64> window_of(std::initializer_list<i64> entries) {
  return std::vector<i64>(entries);
}

}  // namespace

TEST_CASE("validate_seed accepts coprime terms of order 2 and 3") {
  CHECK(gib::validate_seed({1, 3}).order() == 2);
  CHECK(gib::validate_seed({0, 1}).order() == 2);
  CHECK(gib::validate_seed({1, 1, 2}).order() == 3);
  CHECK(gib::validate_seed({-1, 4}).order() == 2);
  CHECK(gib::validate_seed({-3, -5}).terms() == std::vector<i64>{-3, -5});
}

TEST_CASE("validate_seed rejects common factors and bad arity") {
  CHECK_THROWS_AS(gib::validate_seed({2, 2}), gib::non_coprime_seed);
  CHECK_THROWS_AS(gib::validate_seed({0, 0}), gib::non_coprime_seed);
  CHECK_THROWS_AS(gib::validate_seed({2, 4, 6}), gib::non_coprime_seed);
  CHECK_THROWS_AS(gib::validate_seed({1}), gib::wrong_arity);
  CHECK_THROWS_AS(gib::validate_seed({1, 2, 3, 4}), gib::wrong_arity);
  CHECK_THROWS_AS(gib::validate_seed({}), gib::wrong_arity);
}

TEST_CASE("modulus must be at least 1") {
  CHECK(modulus(1).value() == 1);
  CHECK_THROWS_AS(modulus(0), std::invalid_argument);
  CHECK_THROWS_AS(modulus(-3), std::invalid_argument);
}

TEST_CASE("next_state shifts the window and appends the sum") {
  CHECK(next_state(state_vector(window_of({1, 3}), modulus(5))).window() ==
        window_of({3, 4}));
  CHECK(next_state(state_vector(window_of({0, 0}), modulus(7))).window() ==
        window_of({0, 0}));
  CHECK(next_state(state_vector(window_of({1, 1, 2}), modulus(9))).window() ==
        window_of({1, 2, 4}));
}

TEST_CASE("prev_state inverts next_state on the reference examples") {
  CHECK(prev_state(state_vector(window_of({3, 4}), modulus(5))).window() ==
        window_of({1, 3}));
  CHECK(prev_state(state_vector(window_of({0, 0}), modulus(7))).window() ==
        window_of({0, 0}));
  CHECK(prev_state(state_vector(window_of({1, 2, 4}), modulus(9))).window() ==
        window_of({1, 1, 2}));
}

TEST_CASE("the state map is a bijection on random states") {
  std::mt19937_64 rng(20130901);
  int violations = 0;
  for (int trial = 0; trial < 10'000; ++trial) {
    const i64 m = 1 + static_cast<i64>(rng() % 50);
    const int order = rng() % 2 == 0 ? 2 : 3;
    std::vector<i64> window;
    for (int i = 0; i < order; ++i) window.push_back(static_cast<i64>(rng() % static_cast<std::uint64_t>(m)));
    const state_vector s(window, modulus(m));
    if (prev_state(next_state(s)) != s) ++violations;
    if (next_state(prev_state(s)) != s) ++violations;
  }
  CHECK(violations == 0);
}

TEST_CASE("period matches the reference values") {
  CHECK(gib::period(gib::lucas_seed(), modulus(5)) == 4);
  CHECK(gib::period(gib::fibonacci_seed(), modulus(2)) == 3);
  CHECK(gib::period(gib::fibonacci_seed(), modulus(10)) == 60);
}

TEST_CASE("period agrees with a map-based first-repeat oracle") {
  const std::vector<std::vector<i64>> seeds{{1, 1}, {1, 3}, {2, 7}, {1, 1, 1},
                                            {1, 1, 2}, {1, 2, 3}};
  for (const auto& terms : seeds) {
    for (i64 m = 1; m <= 25; ++m) {
      const auto oracle = oracles::naive_orbit(terms, m);
      REQUIRE(oracle.purely_periodic);
      REQUIRE(gib::period(gib::validate_seed(terms), modulus(m)) ==
              oracle.period);
    }
  }
}

TEST_CASE("terms_one_period matches the reference cycles") {
  CHECK(gib::terms_one_period(gib::lucas_seed(), modulus(4)) ==
        window_of({1, 3, 0, 3, 3, 2}));
  CHECK(gib::terms_one_period(gib::validate_seed({1, 1, 1}), modulus(2)) ==
        window_of({1}));
  CHECK(gib::terms_one_period(gib::validate_seed({1, 1, 2}), modulus(2)) ==
        window_of({1, 1, 0, 0}));
}

TEST_CASE("mod 1 collapses everything to the trivial cycle") {
  CHECK(gib::period(gib::fibonacci_seed(), modulus(1)) == 1);
  CHECK(gib::terms_one_period(gib::lucas_seed(), modulus(1)) ==
        window_of({0}));
  CHECK(gib::period(gib::validate_seed({1, 1, 2}), modulus(1)) == 1);
}

TEST_CASE("negative seeds reduce to their least positive residues") {
  // The reduced pair need not be coprime as raw integers, so the comparison
  // runs at the state level.
  for (i64 m = 2; m <= 20; ++m) {
    const state_vector reduced(window_of({(m - 1) % m, 4 % m}), modulus(m));
    CHECK(gib::terms_one_period(gib::validate_seed({-1, 4}), modulus(m)) ==
          gib::terms_of_state_orbit(reduced));
  }
  CHECK(gib::terms_one_period(gib::validate_seed({-8, 3}), modulus(5)) ==
        gib::terms_one_period(gib::validate_seed({2, 3}), modulus(5)));
}

TEST_CASE("orbits are purely periodic for all small coprime seeds") {
  // First repeated window along an orbit must be the initial one. Stamped
  // visit marks make the exhaustive sweep cheap.
  for (int order = 2; order <= 3; ++order) {
    for (i64 m = 1; m <= 30; ++m) {
      std::size_t states = 1;
      for (int i = 0; i < order; ++i) states *= static_cast<std::size_t>(m);
      std::vector<i64> stamp(states, -1);
      i64 walk_id = 0;

      std::vector<i64> terms(static_cast<std::size_t>(order), 0);
      const i64 lo = -10, hi = 10;
      const auto encode = [&](const std::vector<i64>& w) {
        std::size_t idx = 0;
        for (const i64 x : w) idx = idx * static_cast<std::size_t>(m) + static_cast<std::size_t>(x);
        return idx;
      };
      const std::size_t combos =
          static_cast<std::size_t>(order == 2 ? 21 * 21 : 21 * 21 * 21);
      for (std::size_t combo = 0; combo < combos; ++combo) {
        std::size_t rem = combo;
        i64 g = 0;
        for (int i = 0; i < order; ++i) {
          terms[static_cast<std::size_t>(i)] = lo + static_cast<i64>(rem % 21);
          rem /= 21;
          g = std::gcd(g, terms[static_cast<std::size_t>(i)]);
        }
        if (g != 1) continue;
        (void)hi;

        std::vector<i64> w(terms);
        for (i64& x : w) x = ((x % m) + m) % m;
        const std::vector<i64> initial = w;
        const i64 id = walk_id++;
        for (;;) {
          const std::size_t idx = encode(w);
          if (stamp[idx] == id) {
            REQUIRE(w == initial);  // no rho-shaped tails
            break;
          }
          stamp[idx] = id;
          i64 sum = 0;
          for (const i64 x : w) sum += x;
          for (std::size_t i = 0; i + 1 < w.size(); ++i) w[i] = w[i + 1];
          w.back() = sum % m;
        }
      }
    }
  }
}

TEST_CASE("period is invariant under rotation of the starting state") {
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 200; ++trial) {
    const i64 m = 2 + static_cast<i64>(rng() % 40);
    const int order = rng() % 2 == 0 ? 2 : 3;
    std::vector<i64> window;
    for (int i = 0; i < order; ++i) window.push_back(static_cast<i64>(rng() % static_cast<std::uint64_t>(m)));
    state_vector s(window, modulus(m));
    const i64 h = period_of_state(s);
    state_vector rotated = s;
    for (int step = 0; step < 5; ++step) {
      rotated = next_state(rotated);
      REQUIRE(period_of_state(rotated) == h);
    }
  }
}

TEST_CASE("scan_orbit reports length and coverage, honoring the budget") {
  const state_vector lucas5(gib::lucas_seed(), modulus(5));
  const auto scan = gib::scan_orbit(lucas5, 1'000);
  REQUIRE(scan.has_value());
  CHECK(scan->length == 4);
  CHECK(scan->residues_covered == 4);  // 0 never appears

  CHECK_FALSE(gib::scan_orbit(lucas5, 3).has_value());
  CHECK(gib::scan_orbit(lucas5, 4).has_value());
}
