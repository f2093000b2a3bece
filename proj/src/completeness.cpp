#include "gib/completeness.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>

namespace gib {

namespace {

constexpr std::array<i64, 5> small_members{1, 2, 4, 6, 7};

bool power_of_three(i64 m) {
  if (m < 3) return false;
  while (m % 3 == 0) m /= 3;
  return m == 1;
}

i64 pow_i64(i64 base, int exp) {
  i64 out = 1;
  for (int i = 0; i < exp; ++i) out *= base;
  return out;
}

}  // namespace

completeness_report is_complete(const seed& s, modulus m) {
  const i64 mod = m.value();
  state_vector start(s, m);
  std::vector<char> seen(static_cast<std::size_t>(mod), 0);

  // One full cycle carries every residue the sequence ever attains.
  std::array<i64, 3> w{};
  const int order = start.order();
  for (int i = 0; i < order; ++i) w[static_cast<std::size_t>(i)] = start.window()[static_cast<std::size_t>(i)];
  i64 h = 0;
  const std::array<i64, 3> initial = w;
  do {
    seen[static_cast<std::size_t>(w[0])] = 1;
    if (order == 2) {
      const i64 sum = (w[0] + w[1]) % mod;
      w[0] = w[1];
      w[1] = sum;
    } else {
      const i64 sum = (w[0] + w[1] + w[2]) % mod;
      w[0] = w[1];
      w[1] = w[2];
      w[2] = sum;
    }
    ++h;
  } while (w != initial);

  completeness_report report{s, mod, true, {}, {}, h};
  for (i64 r = 0; r < mod; ++r) {
    if (seen[static_cast<std::size_t>(r)]) {
      report.covered.push_back(r);
    } else {
      report.missing.push_back(r);
    }
  }
  report.complete = report.missing.empty();
  return report;
}

invariant_value pair_invariant(i64 a, i64 b) {
  const __int128 wide = static_cast<__int128>(a) * a +
                        static_cast<__int128>(a) * b -
                        static_cast<__int128>(b) * b;
  __int128 magnitude = wide < 0 ? -wide : wide;
  if (magnitude > std::numeric_limits<i64>::max()) {
    throw std::overflow_error("invariant magnitude exceeds 64 bits");
  }
  const int residue = static_cast<int>(((wide % 5) + 5) % 5);
  return invariant_value{static_cast<i64>(magnitude), residue};
}

invariant_value gibonacci_invariant(const seed& s) {
  if (s.order() != 2) {
    throw wrong_arity("the invariant is defined for order-2 seeds");
  }
  return pair_invariant(s.terms()[0], s.terms()[1]);
}

sequence_class classify(const seed& s) {
  return gibonacci_invariant(s).residue_mod_5 == 0
             ? sequence_class::lucas_class
             : sequence_class::fibonacci_class;
}

bool mf_contains(i64 m) {
  if (m < 1) return false;
  while (m % 5 == 0) m /= 5;
  for (const i64 v : small_members) {
    if (m == v) return true;
  }
  return m == 14 || power_of_three(m);
}

bool ml_contains(i64 m) {
  if (m == 1) return true;  // trivially complete
  return m == 2 || m == 4 || m == 6 || m == 7 || m == 14 || power_of_three(m);
}

bool predicted_complete(const seed& s, modulus m) {
  return classify(s) == sequence_class::lucas_class ? ml_contains(m.value())
                                                    : mf_contains(m.value());
}

bool check_descent(const seed& s, modulus m, i64 t) {
  if (t < 1) throw std::invalid_argument("multiplier t must be at least 1");
  const bool complete_tm = is_complete(s, modulus(t * m.value())).complete;
  return !complete_tm || is_complete(s, m).complete;
}

bool check_wall_thm2(const seed& s, modulus m) {
  i64 remaining = m.value();
  if (remaining < 2) {
    throw std::invalid_argument("the factorization check needs m >= 2");
  }
  i64 combined = 1;
  for (i64 p = 2; p * p <= remaining; ++p) {
    if (remaining % p != 0) continue;
    i64 prime_power = 1;
    while (remaining % p == 0) {
      remaining /= p;
      prime_power *= p;
    }
    combined = std::lcm(combined, period(s, modulus(prime_power)));
  }
  if (remaining > 1) combined = std::lcm(combined, period(s, modulus(remaining)));
  return combined == period(s, m);
}

period_ratio check_wall_thm9(const seed& s, int k) {
  if (s.order() != 2) {
    throw wrong_arity("the length-ratio check is defined for order 2");
  }
  if (k < 1 || k > 20) {
    throw std::invalid_argument("exponent k must be in [1, 20]");
  }
  const modulus m(pow_i64(5, k));
  const i64 h_seed = period(s, m);
  const i64 h_fib = period(fibonacci_seed(), m);
  if (h_seed == h_fib) return period_ratio::full_length;
  if (5 * h_seed == h_fib) return period_ratio::fifth_length;
  throw error("cycle length " + std::to_string(h_seed) + " mod 5^" +
              std::to_string(k) + " is neither the Fibonacci length " +
              std::to_string(h_fib) + " nor a fifth of it");
}

bool check_burr_lemma3(i64 m, i64 n) {
  if (m < 2) throw std::invalid_argument("the extension check needs m >= 2");
  if (n < 1) throw std::invalid_argument("index n must be at least 1");
  const i64 k = period(fibonacci_seed(), modulus(m));
  const i64 five_m = 5 * m;
  const i64 k5 = period(fibonacci_seed(), modulus(five_m));
  if (k5 != 5 * k) {
    throw hypothesis_not_met("Fibonacci cycle has length " +
                             std::to_string(k5) + " mod " +
                             std::to_string(five_m) + ", not 5 * " +
                             std::to_string(k));
  }

  // Walk F_1, F_2, ... mod 5m, sampling indices n, k+n, ..., 4k+n.
  std::array<i64, 5> sampled{};
  i64 current = 1 % five_m;  // F_1
  i64 next = 1 % five_m;     // F_2
  const i64 last_index = 4 * k + n;
  for (i64 index = 1; index <= last_index; ++index) {
    if (index >= n && (index - n) % k == 0) {
      sampled[static_cast<std::size_t>((index - n) / k)] = current;
    }
    const i64 sum = (current + next) % five_m;
    current = next;
    next = sum;
  }

  const i64 a = sampled[0] % m;
  std::array<i64, 5> expected{};
  for (i64 i = 0; i < 5; ++i) expected[static_cast<std::size_t>(i)] = i * m + a;
  std::sort(sampled.begin(), sampled.end());
  return sampled == expected;
}

}  // namespace gib
