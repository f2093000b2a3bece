#include "gib/cycle.hpp"

#include <algorithm>
#include <string>

namespace gib {

namespace {

// Index of the lexicographically least rotation (two-candidate duel).
std::size_t least_rotation_start(const std::vector<i64>& s) {
  const std::size_t n = s.size();
  std::size_t i = 0, j = 1, k = 0;
  while (i < n && j < n && k < n) {
    const i64 a = s[(i + k) % n];
    const i64 b = s[(j + k) % n];
    if (a == b) {
      ++k;
      continue;
    }
    if (a > b) {
      i += k + 1;
    } else {
      j += k + 1;
    }
    if (i == j) ++j;
    k = 0;
  }
  return std::min(i, j);
}

}  // namespace

std::vector<i64> canonical_rotation(std::vector<i64> residues) {
  if (residues.empty()) {
    throw std::invalid_argument("cannot rotate an empty residue list");
  }
  const std::size_t start = least_rotation_start(residues);
  std::rotate(residues.begin(),
              residues.begin() + static_cast<std::ptrdiff_t>(start),
              residues.end());
  return residues;
}

std::vector<i64> scale_residues(const std::vector<i64>& residues, i64 k,
                                i64 m) {
  std::vector<i64> out;
  out.reserve(residues.size());
  for (const i64 r : residues) out.push_back((r * k) % m);
  return out;
}

cycle cycle::from_residues(modulus m, int order, std::vector<i64> residues) {
  if (order != 2 && order != 3) {
    throw wrong_arity("cycle order must be 2 or 3, got " +
                      std::to_string(order));
  }
  if (residues.empty()) {
    throw error("a cycle must contain at least one residue");
  }
  const i64 mod = m.value();
  const std::size_t h = residues.size();
  for (const i64 r : residues) {
    if (r < 0 || r >= mod) {
      throw error("residue " + std::to_string(r) + " is outside [0, " +
                  std::to_string(mod) + ")");
    }
  }
  // Recurrence with wrap-around at the ends.
  for (std::size_t i = 0; i < h; ++i) {
    i64 sum = 0;
    for (int t = 0; t < order; ++t) {
      sum += residues[(i + static_cast<std::size_t>(t)) % h];
    }
    if (sum % mod != residues[(i + static_cast<std::size_t>(order)) % h]) {
      throw error("residue list does not satisfy the recurrence at index " +
                  std::to_string(i));
    }
  }
  // No proper rotation period: reject repetitions of a shorter cycle.
  for (std::size_t d = 1; d < h; ++d) {
    if (h % d != 0) continue;
    bool repeats = true;
    for (std::size_t i = 0; i < h && repeats; ++i) {
      repeats = residues[i] == residues[(i + d) % h];
    }
    if (repeats) {
      throw error("residue list repeats a shorter cycle of length " +
                  std::to_string(d));
    }
  }
  return cycle(mod, order, canonical_rotation(std::move(residues)));
}

bool cycle::contains(i64 residue) const {
  return std::find(residues_.begin(), residues_.end(), residue) !=
         residues_.end();
}

cycle cycle_of_state(const state_vector& s) {
  // One orbit traversal always yields a primitive residue list: a shorter
  // rotation period would mean the window recurred before the orbit closed.
  return cycle(s.mod(), s.order(),
               canonical_rotation(terms_of_state_orbit(s)));
}

cycle extract_cycle(const seed& s, modulus m) {
  return cycle_of_state(state_vector(s, m));
}

bool equivalent(const cycle& a, const cycle& b) {
  if (a.mod() != b.mod() || a.order() != b.order()) {
    throw modulus_mismatch("cannot compare a cycle mod " +
                           std::to_string(a.mod()) + " (order " +
                           std::to_string(a.order()) + ") with one mod " +
                           std::to_string(b.mod()) + " (order " +
                           std::to_string(b.order()) + ")");
  }
  return a.residues() == b.residues();
}

std::optional<i64> fibonacci_multiple_of(const cycle& c) {
  if (c.order() != 2) {
    throw wrong_arity("Fibonacci multiples are defined for order-2 cycles");
  }
  const auto& r = c.residues();
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (r[i] == 0) return r[(i + 1) % r.size()];
  }
  return std::nullopt;
}

}  // namespace gib
