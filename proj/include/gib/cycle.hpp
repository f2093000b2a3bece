#pragma once

#include <optional>
#include <vector>

#include "gib/recurrence.hpp"

namespace gib {

// Lexicographically least rotation of a nonempty list.
std::vector<i64> canonical_rotation(std::vector<i64> residues);

// Entrywise k * residues mod m.
std::vector<i64> scale_residues(const std::vector<i64>& residues, i64 k, i64 m);

// The repeating residue block of a sequence mod m: closed under the
// recurrence with wrap-around at the ends and not a repetition of a shorter
// block. Stored in canonical (lexicographically least) rotation, so two
// cycles are equivalent exactly when their stored forms are equal.
class cycle {
 public:
  // Validates the wrap-around recurrence and primitivity, then
  // canonicalizes. Throws gib::error when the residues do not form a cycle.
  static cycle from_residues(modulus m, int order, std::vector<i64> residues);

  i64 mod() const noexcept { return m_; }
  int order() const noexcept { return order_; }
  i64 length() const noexcept { return static_cast<i64>(residues_.size()); }
  const std::vector<i64>& residues() const noexcept { return residues_; }
  bool contains(i64 residue) const;

  bool operator==(const cycle&) const = default;

 private:
  cycle(i64 m, int order, std::vector<i64> canonical) noexcept
      : m_(m), order_(order), residues_(std::move(canonical)) {}

  friend cycle cycle_of_state(const state_vector& s);
  friend class complete_system;

  i64 m_;
  int order_;
  std::vector<i64> residues_;
};

cycle extract_cycle(const seed& s, modulus m);

// Cycle of the orbit through an arbitrary window. Unlike extract_cycle this
// does not require coprime entries, e.g. for scaled Fibonacci states.
cycle cycle_of_state(const state_vector& s);

// True iff the cycles have the same length and one residue list is a
// rotation of the other. Throws modulus_mismatch when modulus or order
// differ.
bool equivalent(const cycle& a, const cycle& b);

// If 0 appears in an order-2 cycle, returns the entry just after a 0: the k
// for which k times the Fibonacci cycle mod m is equivalent to this cycle
// (k = 0 names the trivial cycle). Absent when no 0 appears.
std::optional<i64> fibonacci_multiple_of(const cycle& c);

}  // namespace gib
