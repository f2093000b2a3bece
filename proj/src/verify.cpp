#include "gib/verify.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "gib/completeness.hpp"
#include "gib/reference_data.hpp"
#include "gib/survey.hpp"
#include "gib/system.hpp"

namespace gib::verify {

namespace {

check_result ok() { return {true, {}}; }

check_result fail(std::string detail) { return {false, std::move(detail)}; }

check_result expect(bool condition, const std::string& detail) {
  return condition ? ok() : fail(detail);
}

std::string render(const std::vector<i64>& v) {
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out << ", ";
    out << v[i];
  }
  out << ')';
  return out.str();
}

// The cycle of `terms` mod m must match `expected` up to rotation.
check_result cycle_matches(std::vector<i64> terms, i64 m,
                           const std::vector<i64>& expected) {
  const seed s = validate_seed(std::move(terms));
  const cycle actual = extract_cycle(s, modulus(m));
  const cycle want = cycle::from_residues(modulus(m), s.order(), expected);
  return expect(equivalent(actual, want),
                "cycle mod " + std::to_string(m) + " is " +
                    render(actual.residues()) + ", expected a rotation of " +
                    render(expected));
}

// The enumerated system mod m must equal the listing as a set of cycles
// (compared up to rotation).
check_result system_matches(i64 m, int order,
                            const reference::system_listing& listing) {
  const auto system = complete_system::enumerate(modulus(m), order);
  if (system.cycles().size() != listing.size()) {
    return fail("system mod " + std::to_string(m) + " has " +
                std::to_string(system.cycles().size()) + " cycles, expected " +
                std::to_string(listing.size()));
  }
  std::set<std::vector<i64>> expected;
  for (const auto& residues : listing) {
    expected.insert(
        cycle::from_residues(modulus(m), order, residues).residues());
  }
  for (const cycle& c : system.cycles()) {
    if (expected.erase(c.residues()) != 1) {
      return fail("unexpected cycle " + render(c.residues()) + " mod " +
                  std::to_string(m));
    }
  }
  return ok();
}

std::vector<std::pair<i64, i64>> coprime_pairs(i64 limit) {
  std::vector<std::pair<i64, i64>> pairs;
  for (i64 a = 0; a <= limit; ++a) {
    for (i64 b = 0; b <= limit; ++b) {
      if (std::gcd(a, b) == 1) pairs.emplace_back(a, b);
    }
  }
  return pairs;
}

check_result check_survey(const std::vector<i64>& seed_terms,
                          const reference::survey_reference& expected) {
  const seed s = validate_seed(seed_terms);
  const auto records = run_survey(s, 300);
  const auto by20 = bucketize(records, 20);
  const auto by100 = bucketize(records, 100);
  if (by20.total_complete != expected.total_complete) {
    return fail("total complete is " + std::to_string(by20.total_complete) +
                ", expected " + std::to_string(expected.total_complete));
  }
  for (std::size_t i = 0; i < expected.complete_by_20.size(); ++i) {
    const auto& bucket = by20.buckets[i];
    if (bucket.complete != expected.complete_by_20[i]) {
      return fail("bucket " + std::to_string(i + 1) + " of 20 has " +
                  std::to_string(bucket.complete) + " complete, expected " +
                  std::to_string(expected.complete_by_20[i]));
    }
    const auto& range = reference::prime_bucket20_ranges[i];
    if (bucket.first_prime != range.first || bucket.last_prime != range.second) {
      return fail("bucket " + std::to_string(i + 1) + " spans " +
                  std::to_string(bucket.first_prime) + "-" +
                  std::to_string(bucket.last_prime) + ", expected " +
                  std::to_string(range.first) + "-" +
                  std::to_string(range.second));
    }
  }
  for (std::size_t i = 0; i < expected.complete_by_100.size(); ++i) {
    if (by100.buckets[i].complete != expected.complete_by_100[i]) {
      return fail("bucket " + std::to_string(i + 1) + " of 100 has " +
                  std::to_string(by100.buckets[i].complete) +
                  " complete, expected " +
                  std::to_string(expected.complete_by_100[i]));
    }
    if (by100.cumulative[i].percent != expected.cumulative_percent[i]) {
      return fail("cumulative percent after bucket " + std::to_string(i + 1) +
                  " is " + std::to_string(by100.cumulative[i].percent));
    }
  }
  return ok();
}

std::vector<named_check> build_checks() {
  using reference::residue_list;
  std::vector<named_check> checks;
  auto add = [&checks](std::string name, std::function<check_result()> run) {
    checks.push_back({std::move(name), std::move(run)});
  };

  add("cycle/lucas-mod-4",
      [] { return cycle_matches({1, 3}, 4, reference::lucas_cycle_mod4); });
  add("cycle/lucas-mod-5",
      [] { return cycle_matches({1, 3}, 5, reference::lucas_cycle_mod5); });
  add("cycle/lucas-mod-6", [] {
    // The listed 15 leading terms already cover all residues; the full
    // cycle has 24 terms and is a rotation of the Fibonacci cycle mod 6.
    const auto terms = terms_one_period(lucas_seed(), modulus(6));
    if (terms.size() != 24) {
      return fail("Lucas cycle mod 6 has " + std::to_string(terms.size()) +
                  " terms, expected 24");
    }
    for (std::size_t i = 0; i < reference::lucas_mod6_leading_terms.size(); ++i) {
      if (terms[i] != reference::lucas_mod6_leading_terms[i]) {
        return fail("term " + std::to_string(i + 1) + " mod 6 is " +
                    std::to_string(terms[i]));
      }
    }
    return cycle_matches({1, 3}, 6, reference::fibonacci_cycle_mod6);
  });
  add("cycle/lucas-mod-14",
      [] { return cycle_matches({1, 3}, 14, reference::lucas_cycle_mod14); });
  add("cycle/fibonacci-mod-4", [] {
    return cycle_matches({1, 1}, 4, reference::fibonacci_cycle_mod4);
  });
  add("cycle/fibonacci-mod-14", [] {
    return cycle_matches({1, 1}, 14, reference::fibonacci_cycle_mod14);
  });
  add("cycle/tribonacci-a-mod-2", [] {
    return cycle_matches({1, 1, 1}, 2, reference::tribonacci_a_cycle_mod2);
  });
  add("cycle/tribonacci-b-mod-2", [] {
    return cycle_matches({1, 1, 2}, 2, reference::tribonacci_b_cycle_mod2);
  });
  add("cycle/tribonacci-a-mod-9", [] {
    return cycle_matches({1, 1, 1}, 9, reference::tribonacci_a_cycle_mod9);
  });
  add("cycle/tribonacci-b-mod-9", [] {
    return cycle_matches({1, 1, 2}, 9, reference::tribonacci_b_cycle_mod9);
  });

  add("system/mod-2",
      [] { return system_matches(2, 2, reference::gibonacci_system_mod2); });
  add("system/mod-3",
      [] { return system_matches(3, 2, reference::gibonacci_system_mod3); });
  add("system/mod-4",
      [] { return system_matches(4, 2, reference::gibonacci_system_mod4); });
  add("system/mod-5",
      [] { return system_matches(5, 2, reference::gibonacci_system_mod5); });
  add("system/mod-6",
      [] { return system_matches(6, 2, reference::gibonacci_system_mod6); });
  add("system/mod-14", [] {
    const auto result =
        system_matches(14, 2, reference::gibonacci_system_mod14);
    if (!result.pass) return result;
    // 144 terms in the three Fibonacci-scaled cycles, 52 in the rest.
    const auto system = complete_system::enumerate(modulus(14), 2);
    i64 in48 = 0, rest = 0;
    for (const cycle& c : system.cycles()) {
      (c.length() == 48 ? in48 : rest) += c.length();
    }
    if (in48 != 144 || rest != 52) {
      return fail("terms split " + std::to_string(in48) + " + " +
                  std::to_string(rest) + ", expected 144 + 52");
    }
    return expect(system.term_count() == 196, "term count is not 196");
  });
  add("system/tribonacci-mod-2", [] {
    const auto result = system_matches(2, 3, reference::tribonacci_system_mod2);
    if (!result.pass) return result;
    const auto system = complete_system::enumerate(modulus(2), 3);
    return expect(system.term_count() == 8, "term count is not 8");
  });

  add("law/term-count-order-2", [] {
    for (i64 m = 1; m <= 40; ++m) {
      const auto system = complete_system::enumerate(modulus(m), 2);
      i64 total = 0;
      for (const cycle& c : system.cycles()) total += c.length();
      if (total != m * m || system.term_count() != m * m) {
        return fail("system mod " + std::to_string(m) + " totals " +
                    std::to_string(total) + " terms, expected m^2");
      }
    }
    return ok();
  });
  add("law/term-count-order-3", [] {
    for (i64 m = 1; m <= 12; ++m) {
      const auto system = complete_system::enumerate(modulus(m), 3);
      i64 total = 0;
      for (const cycle& c : system.cycles()) total += c.length();
      if (total != m * m * m || system.term_count() != m * m * m) {
        return fail("system mod " + std::to_string(m) + " totals " +
                    std::to_string(total) + " terms, expected m^3");
      }
    }
    return ok();
  });

  add("set/lucas-complete-moduli", [] {
    const std::set<i64> expected{2, 4, 6, 7, 14, 3, 9, 27, 81, 243, 729, 2187};
    for (i64 m = 2; m <= 2200; ++m) {
      const bool complete = is_complete(lucas_seed(), modulus(m)).complete;
      if (complete != (expected.count(m) == 1)) {
        return fail("Lucas sequence is " +
                    std::string(complete ? "complete" : "defective") +
                    " mod " + std::to_string(m));
      }
      if (complete != ml_contains(m)) {
        return fail("ml_contains disagrees at m = " + std::to_string(m));
      }
    }
    return ok();
  });
  add("set/fibonacci-complete-moduli", [] {
    for (i64 m = 2; m <= 1000; ++m) {
      const bool complete = is_complete(fibonacci_seed(), modulus(m)).complete;
      if (complete != mf_contains(m)) {
        return fail("Fibonacci sequence is " +
                    std::string(complete ? "complete" : "defective") +
                    " mod " + std::to_string(m) +
                    ", mf_contains says otherwise");
      }
    }
    return ok();
  });

  add("invariant/reference-values", [] {
    if (gibonacci_invariant(fibonacci_seed()).magnitude != 1) {
      return fail("Fibonacci invariant is not 1");
    }
    if (gibonacci_invariant(lucas_seed()).magnitude != 5) {
      return fail("Lucas invariant is not 5");
    }
    return expect(pair_invariant(4, 0).magnitude == 16,
                  "invariant of the pair (4, 0) is not 16");
  });
  add("invariant/mod-5-dichotomy", [] {
    const cycle fib5 = extract_cycle(fibonacci_seed(), modulus(5));
    const cycle lucas5 = extract_cycle(lucas_seed(), modulus(5));
    for (const auto& [a, b] : coprime_pairs(12)) {
      const seed s = validate_seed({a, b});
      const cycle c = extract_cycle(s, modulus(5));
      const bool lucas_like =
          gibonacci_invariant(s).residue_mod_5 == 0;
      const cycle& expected = lucas_like ? lucas5 : fib5;
      if (!equivalent(c, expected)) {
        return fail("seed (" + std::to_string(a) + ", " + std::to_string(b) +
                    ") lands in the wrong cycle mod 5");
      }
    }
    return ok();
  });
  add("classification/oracle-agreement", [] {
    for (const auto& [a, b] : coprime_pairs(12)) {
      const seed s = validate_seed({a, b});
      for (i64 m = 2; m <= 500; ++m) {
        if (predicted_complete(s, modulus(m)) !=
            is_complete(s, modulus(m)).complete) {
          return fail("prediction wrong for seed (" + std::to_string(a) +
                      ", " + std::to_string(b) + ") mod " + std::to_string(m));
        }
      }
    }
    return ok();
  });

  add("wall/uniform-cycle-lengths", [] {
    const std::vector<std::pair<i64, i64>> sample_seeds{
        {1, 1}, {1, 3}, {2, 3}, {5, 8}, {0, 1}, {3, 7}, {11, 7}, {9, 11}};
    for (const auto& [m, length] : reference::uniform_cycle_lengths) {
      for (const auto& [a, b] : sample_seeds) {
        if (period(validate_seed({a, b}), modulus(m)) != length) {
          return fail("seed (" + std::to_string(a) + ", " + std::to_string(b) +
                      ") does not have length " + std::to_string(length) +
                      " mod " + std::to_string(m));
        }
      }
    }
    i64 power = 3, length = 8;  // 8 * 3^(j-1) mod 3^j
    for (int j = 1; j <= 5; ++j) {
      for (const auto& [a, b] : sample_seeds) {
        if (period(validate_seed({a, b}), modulus(power)) != length) {
          return fail("length mod 3^" + std::to_string(j) + " is not " +
                      std::to_string(length));
        }
      }
      power *= 3;
      length *= 3;
    }
    return ok();
  });
  add("wall/fifth-length-criterion", [] {
    const std::vector<std::pair<i64, i64>> sample_seeds{
        {1, 1}, {1, 3}, {2, 3}, {2, 9}, {4, 3}, {7, 4}, {12, 1}, {3, 11}};
    for (int k = 1; k <= 4; ++k) {
      for (const auto& [a, b] : sample_seeds) {
        const seed s = validate_seed({a, b});
        const bool fifth =
            check_wall_thm9(s, k) == period_ratio::fifth_length;
        if (fifth != (gibonacci_invariant(s).magnitude % 5 == 0)) {
          return fail("length ratio mod 5^" + std::to_string(k) +
                      " contradicts the invariant for seed (" +
                      std::to_string(a) + ", " + std::to_string(b) + ")");
        }
      }
    }
    return ok();
  });

  add("burr/power-of-three-structure", [] {
    i64 power = 3;  // 3^(j-1)
    for (int j = 2; j <= 4; ++j) {
      const i64 mod_j = power * 3;
      std::set<std::vector<i64>> expected;
      const auto fib = terms_one_period(fibonacci_seed(), modulus(mod_j));
      for (i64 k = 1; k < mod_j; ++k) {
        if (k % 3 == 0) continue;
        expected.insert(canonical_rotation(scale_residues(fib, k, mod_j)));
      }
      const auto smaller_system = complete_system::enumerate(modulus(power), 2);
      for (const cycle& c : smaller_system.cycles()) {
        expected.insert(
            canonical_rotation(scale_residues(c.residues(), 3, mod_j)));
      }
      const auto system = complete_system::enumerate(modulus(mod_j), 2);
      if (expected.size() != system.cycles().size()) {
        return fail("construction yields " + std::to_string(expected.size()) +
                    " cycles mod 3^" + std::to_string(j) + ", system has " +
                    std::to_string(system.cycles().size()));
      }
      for (const cycle& c : system.cycles()) {
        if (expected.erase(c.residues()) != 1) {
          return fail("cycle " + render(c.residues()) +
                      " missing from the construction mod 3^" +
                      std::to_string(j));
        }
      }
      power = mod_j;
    }
    return ok();
  });
  add("burr/fifth-extension-lemma", [] {
    for (const i64 m : {5, 7, 25, 35}) {
      for (i64 n = 1; n <= 20; ++n) {
        if (!check_burr_lemma3(m, n)) {
          return fail("extension fails for m = " + std::to_string(m) +
                      ", n = " + std::to_string(n));
        }
      }
    }
    for (const i64 m : {2, 4}) {
      try {
        check_burr_lemma3(m, 1);
        return fail("m = " + std::to_string(m) +
                    " should not satisfy the hypothesis");
      } catch (const hypothesis_not_met&) {
      }
    }
    return ok();
  });

  add("cycle/zero-iff-fibonacci-multiple", [] {
    for (i64 m = 1; m <= 30; ++m) {
      const auto system = complete_system::enumerate(modulus(m), 2);
      for (const cycle& c : system.cycles()) {
        const auto k = fibonacci_multiple_of(c);
        if (k.has_value() != c.contains(0)) {
          return fail("multiplier/zero mismatch mod " + std::to_string(m));
        }
        if (k) {
          const std::vector<i64> window{*k % m, *k % m};
          if (!equivalent(cycle_of_state(state_vector(window, modulus(m))), c)) {
            return fail("k = " + std::to_string(*k) +
                        " does not reproduce the cycle " + render(c.residues()) +
                        " mod " + std::to_string(m));
          }
        }
      }
    }
    return ok();
  });

  add("tribonacci/spot-facts", [] {
    const seed a = validate_seed({1, 1, 1});
    const seed b = validate_seed({1, 1, 2});
    const seed t123 = validate_seed({1, 2, 3});
    struct spot {
      const seed* s;
      i64 m;
      bool complete;
    };
    const std::vector<spot> spots{
        {&a, 2, false},  {&b, 2, true},  {&a, 9, true},  {&b, 9, false},
        {&t123, 2, true}, {&t123, 9, true}, {&t123, 67, false},
        {&a, 67, true},  {&b, 67, true},
    };
    for (const auto& [s, m, complete] : spots) {
      if (is_complete(*s, modulus(m)).complete != complete) {
        return fail("seed " + render(s->terms()) + " mod " +
                    std::to_string(m) + " should be " +
                    (complete ? "complete" : "defective"));
      }
    }
    i64 power = 5;
    for (int j = 1; j <= 5; ++j) {
      if (!is_complete(a, modulus(power)).complete ||
          !is_complete(b, modulus(power)).complete) {
        return fail("a Tribonacci reference seed is defective mod 5^" +
                    std::to_string(j));
      }
      power *= 5;
    }
    return ok();
  });

  add("survey/tribonacci-a-300-primes",
      [] { return check_survey({1, 1, 1}, reference::tribonacci_a_survey); });
  add("survey/tribonacci-b-300-primes",
      [] { return check_survey({1, 1, 2}, reference::tribonacci_b_survey); });

  return checks;
}

}  // namespace

const std::vector<named_check>& reference_checks() {
  static const std::vector<named_check> checks = build_checks();
  return checks;
}

}  // namespace gib::verify
