#pragma once

#include <vector>

#include "gib/recurrence.hpp"

namespace gib {

// Residue coverage of one full cycle of a sequence mod m. A sequence is
// complete mod m when all m residues appear; otherwise it is defective.
struct completeness_report {
  seed sequence;
  i64 mod;
  bool complete;
  std::vector<i64> covered;  // ascending
  std::vector<i64> missing;  // ascending
  i64 cycle_length;
};

completeness_report is_complete(const seed& s, modulus m);

// L = |a^2 + ab - b^2| is constant over all consecutive pairs of an order-2
// sequence. Its residue mod 5 separates the two nontrivial cycles mod 5:
// 0 for the Lucas-like cycle (1, 3, 4, 2), +-1 for the Fibonacci cycle.
struct invariant_value {
  i64 magnitude;      // L
  int residue_mod_5;  // (a^2 + ab - b^2) mod 5, in [0, 5)
};

invariant_value pair_invariant(i64 a, i64 b);
invariant_value gibonacci_invariant(const seed& s);  // order 2 only

enum class sequence_class {
  fibonacci_class,  // complete mod the full Fibonacci set of moduli (M_F)
  lucas_class,      // complete mod the Lucas set only (M_L)
};

// lucas_class iff a^2 + ab - b^2 is divisible by 5.
sequence_class classify(const seed& s);

// Membership in the Fibonacci completeness set: m with all factors of 5
// removed must be one of {1, 2, 4, 6, 7, 14} or a power of 3.
bool mf_contains(i64 m);

// Membership in the Lucas completeness set: {2, 4, 6, 7, 14} or a power of
// 3. m = 1 is included by the trivial-completeness convention.
bool ml_contains(i64 m);

// Completeness of an order-2 sequence mod m predicted from its class alone,
// without iterating the sequence. Always agrees with is_complete.
bool predicted_complete(const seed& s, modulus m);

// Falsification probe: true iff "complete mod t*m implies complete mod m"
// holds for this instance. Must always return true.
bool check_descent(const seed& s, modulus m, i64 t);

// Falsification probe: true iff the cycle length mod m equals the lcm of
// the cycle lengths mod the prime-power factors of m. Requires m >= 2.
bool check_wall_thm2(const seed& s, modulus m);

// Observed ratio between the cycle length of an order-2 sequence mod 5^k
// and the Fibonacci cycle length mod 5^k. fifth_length occurs exactly when
// the invariant is divisible by 5.
enum class period_ratio {
  full_length,
  fifth_length,
};
period_ratio check_wall_thm9(const seed& s, int k);

// Falsification probe for the extension step from m to 5m: when the
// Fibonacci cycle has length k mod m and 5k mod 5m, the five terms
// F_n, F_(k+n), ..., F_(4k+n) taken mod 5m must be {a, m+a, ..., 4m+a} in
// some order, where a = F_n mod m. Throws hypothesis_not_met when the
// length mod 5m is not 5k.
bool check_burr_lemma3(i64 m, i64 n);

}  // namespace gib
