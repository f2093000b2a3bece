#include "gib/system.hpp"

#include <algorithm>
#include <string>

namespace gib {

complete_system complete_system::enumerate(modulus m, int order,
                                           i64 state_budget) {
  if (order != 2 && order != 3) {
    throw wrong_arity("system order must be 2 or 3, got " +
                      std::to_string(order));
  }
  const i64 mod = m.value();
  __int128 states_wide = 1;
  for (int i = 0; i < order; ++i) states_wide *= mod;
  if (states_wide > state_budget) {
    throw resource_limit("enumerating all windows mod " + std::to_string(mod) +
                         " (order " + std::to_string(order) + ") needs " +
                         std::to_string(static_cast<double>(states_wide)) +
                         " states; budget is " + std::to_string(state_budget));
  }
  const i64 states = static_cast<i64>(states_wide);
  const i64 lead_divisor = order == 2 ? mod : mod * mod;

  std::vector<bool> visited(static_cast<std::size_t>(states), false);
  std::vector<cycle> cycles;
  for (i64 origin = 0; origin < states; ++origin) {
    if (visited[static_cast<std::size_t>(origin)]) continue;
    std::vector<i64> terms;
    i64 index = origin;
    do {
      visited[static_cast<std::size_t>(index)] = true;
      terms.push_back(index / lead_divisor);
      if (order == 2) {
        const i64 a = index / mod;
        const i64 b = index % mod;
        index = b * mod + (a + b) % mod;
      } else {
        const i64 a = index / (mod * mod);
        const i64 b = (index / mod) % mod;
        const i64 c = index % mod;
        index = (b * mod + c) * mod + (a + b + c) % mod;
      }
    } while (index != origin);
    cycles.push_back(cycle(mod, order, canonical_rotation(std::move(terms))));
  }

  std::sort(cycles.begin(), cycles.end(), [](const cycle& a, const cycle& b) {
    if (a.length() != b.length()) return a.length() > b.length();
    return a.residues() < b.residues();
  });
  return complete_system(mod, order, std::move(cycles), states);
}

i64 complete_system::count_equivalent(const cycle& c) const {
  i64 count = 0;
  for (const cycle& member : cycles_) {
    if (equivalent(member, c)) ++count;
  }
  return count;
}

}  // namespace gib
