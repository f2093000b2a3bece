#pragma once

// Brute-force oracles, independent of the library's implementation paths.

#include <cstdint>
#include <map>
#include <vector>

namespace oracles {

using i64 = std::int64_t;

inline i64 reduce(i64 x, i64 m) {
  const i64 r = x % m;
  return r < 0 ? r + m : r;
}

// Least rotation by materializing every rotation and taking the minimum.
inline std::vector<i64> naive_min_rotation(const std::vector<i64>& v) {
  std::vector<i64> best = v;
  std::vector<i64> rotated = v;
  for (std::size_t r = 1; r < v.size(); ++r) {
    rotated.erase(rotated.begin());
    rotated.push_back(v[r - 1]);
    if (rotated < best) best = rotated;
  }
  return best;
}

struct naive_orbit_result {
  i64 period;           // steps between the two visits of the repeated state
  bool purely_periodic; // first repeated state is the initial one
  std::vector<i64> leading_terms;  // up to the first repeat
};

// Walks a window until any state repeats, recording first-visit indices in a
// map. Detects rho-shaped tails, which the library assumes cannot occur.
inline naive_orbit_result naive_orbit(std::vector<i64> window, i64 m) {
  for (i64& x : window) x = reduce(x, m);
  const std::vector<i64> initial = window;
  std::map<std::vector<i64>, i64> first_seen;
  naive_orbit_result result{};
  i64 step = 0;
  for (;;) {
    const auto [it, inserted] = first_seen.emplace(window, step);
    if (!inserted) {
      result.period = step - it->second;
      result.purely_periodic = window == initial;
      return result;
    }
    result.leading_terms.push_back(window[0]);
    i64 sum = 0;
    for (const i64 x : window) sum += x;
    window.erase(window.begin());
    window.push_back(sum % m);
    ++step;
  }
}

inline bool is_prime(i64 n) {
  if (n < 2) return false;
  for (i64 d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

}  // namespace oracles
