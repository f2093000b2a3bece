#pragma once

#include <vector>

#include "gib/cycle.hpp"

namespace gib {

inline constexpr i64 default_state_budget = 100'000'000;

// All inequivalent cycles mod m for a given order, found by decomposing the
// window-advance permutation on the m^order windows into disjoint orbits.
// The term count (sum of cycle lengths) is m^order by construction.
class complete_system {
 public:
  // Throws resource_limit when m^order exceeds state_budget.
  static complete_system enumerate(modulus m, int order,
                                   i64 state_budget = default_state_budget);

  i64 mod() const noexcept { return m_; }
  int order() const noexcept { return order_; }
  // Sorted by length descending, then canonical residues ascending.
  const std::vector<cycle>& cycles() const noexcept { return cycles_; }
  i64 term_count() const noexcept { return term_count_; }

  // Number of members equivalent to c; 0 or 1 for a well-formed system.
  i64 count_equivalent(const cycle& c) const;

 private:
  complete_system(i64 m, int order, std::vector<cycle> cycles,
                  i64 term_count) noexcept
      : m_(m),
        order_(order),
        cycles_(std::move(cycles)),
        term_count_(term_count) {}

  i64 m_;
  int order_;
  std::vector<cycle> cycles_;
  i64 term_count_;
};

}  // namespace gib
