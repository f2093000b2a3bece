#pragma once

#include <optional>
#include <vector>

#include "gib/seed.hpp"

namespace gib {

// A modulus m >= 1. m = 1 is legal: every residue is 0 and every sequence
// is trivially complete.
class modulus {
 public:
  explicit modulus(i64 m);
  i64 value() const noexcept { return m_; }

  bool operator==(const modulus&) const = default;

 private:
  i64 m_;
};

// Window of `order` consecutive residues of a sequence mod m, each entry in
// [0, m). Advancing the window (drop the oldest entry, append the sum of
// the window) is a bijection on the m^order windows, so every orbit is
// purely periodic: no rho-shaped tails can occur.
class state_vector {
 public:
  // Reduces the seed terms into [0, m).
  state_vector(const seed& s, modulus m);
  // Entries must already lie in [0, m).
  state_vector(std::vector<i64> window, modulus m);

  int order() const noexcept { return static_cast<int>(window_.size()); }
  i64 mod() const noexcept { return m_; }
  const std::vector<i64>& window() const noexcept { return window_; }

  bool operator==(const state_vector&) const = default;

 private:
  std::vector<i64> window_;
  i64 m_;
};

state_vector next_state(const state_vector& s);

// Inverse of next_state: reconstructs the dropped entry by subtracting the
// known predecessors from the newest entry.
state_vector prev_state(const state_vector& s);

// Least h >= 1 with state(n + h) = state(n) for all n. Because the state
// map is a bijection, h is reached exactly when the initial window first
// recurs.
i64 period(const seed& s, modulus m);
i64 period_of_state(const state_vector& s);

// The h residues of one full cycle traversal, starting from the seed's own
// first term. Each entry lies in [0, m).
std::vector<i64> terms_one_period(const seed& s, modulus m);
std::vector<i64> terms_of_state_orbit(const state_vector& s);

// One bounded pass over an orbit: its length and the number of distinct
// residues appearing as leading entries. Returns nullopt if the orbit does
// not close within max_steps.
struct orbit_scan {
  i64 length;
  i64 residues_covered;
};
std::optional<orbit_scan> scan_orbit(const state_vector& s, i64 max_steps);

}  // namespace gib
