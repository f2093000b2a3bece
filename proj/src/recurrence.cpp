#include "gib/recurrence.hpp"

#include <array>
#include <stdexcept>
#include <string>

namespace gib {

namespace {

i64 reduce(i64 x, i64 m) {
  const i64 r = x % m;
  return r < 0 ? r + m : r;
}

// Fixed-size window for the hot iteration loops; w[order..] stays 0.
struct raw_window {
  std::array<i64, 3> w{};
  int order = 2;

  bool operator==(const raw_window&) const = default;
};

raw_window raw_of(const state_vector& s) {
  raw_window r;
  r.order = s.order();
  for (int i = 0; i < r.order; ++i) r.w[static_cast<std::size_t>(i)] = s.window()[static_cast<std::size_t>(i)];
  return r;
}

inline void advance(raw_window& s, i64 m) {
  if (s.order == 2) {
    const i64 sum = (s.w[0] + s.w[1]) % m;
    s.w[0] = s.w[1];
    s.w[1] = sum;
  } else {
    const i64 sum = (s.w[0] + s.w[1] + s.w[2]) % m;
    s.w[0] = s.w[1];
    s.w[1] = s.w[2];
    s.w[2] = sum;
  }
}

}  // namespace

modulus::modulus(i64 m) : m_(m) {
  if (m < 1) {
    throw std::invalid_argument("modulus must be at least 1, got " +
                                std::to_string(m));
  }
}

state_vector::state_vector(const seed& s, modulus m) : m_(m.value()) {
  window_.reserve(s.terms().size());
  for (const i64 t : s.terms()) window_.push_back(reduce(t, m_));
}

state_vector::state_vector(std::vector<i64> window, modulus m)
    : window_(std::move(window)), m_(m.value()) {
  if (window_.size() != 2 && window_.size() != 3) {
    throw wrong_arity("state window must have 2 or 3 entries, got " +
                      std::to_string(window_.size()));
  }
  for (const i64 r : window_) {
    if (r < 0 || r >= m_) {
      throw std::invalid_argument("state entry " + std::to_string(r) +
                                  " is outside [0, " + std::to_string(m_) +
                                  ")");
    }
  }
}

state_vector next_state(const state_vector& s) {
  const auto& w = s.window();
  std::vector<i64> out(w.begin() + 1, w.end());
  i64 sum = 0;
  for (const i64 r : w) sum += r;
  out.push_back(sum % s.mod());
  return state_vector(std::move(out), modulus(s.mod()));
}

state_vector prev_state(const state_vector& s) {
  const auto& w = s.window();
  i64 dropped = w.back();
  for (std::size_t i = 0; i + 1 < w.size(); ++i) dropped -= w[i];
  std::vector<i64> out;
  out.reserve(w.size());
  out.push_back(reduce(dropped, s.mod()));
  out.insert(out.end(), w.begin(), w.end() - 1);
  return state_vector(std::move(out), modulus(s.mod()));
}

i64 period_of_state(const state_vector& s) {
  const i64 m = s.mod();
  const raw_window start = raw_of(s);
  raw_window w = start;
  i64 h = 0;
  do {
    advance(w, m);
    ++h;
  } while (w != start);
  return h;
}

i64 period(const seed& s, modulus m) {
  return period_of_state(state_vector(s, m));
}

std::vector<i64> terms_of_state_orbit(const state_vector& s) {
  const i64 m = s.mod();
  const raw_window start = raw_of(s);
  raw_window w = start;
  std::vector<i64> terms;
  do {
    terms.push_back(w.w[0]);
    advance(w, m);
  } while (w != start);
  return terms;
}

std::vector<i64> terms_one_period(const seed& s, modulus m) {
  return terms_of_state_orbit(state_vector(s, m));
}

std::optional<orbit_scan> scan_orbit(const state_vector& s, i64 max_steps) {
  const i64 m = s.mod();
  const raw_window start = raw_of(s);
  raw_window w = start;
  std::vector<char> seen(static_cast<std::size_t>(m), 0);
  i64 covered = 0;
  i64 h = 0;
  do {
    if (h >= max_steps) return std::nullopt;
    char& mark = seen[static_cast<std::size_t>(w.w[0])];
    if (!mark) {
      mark = 1;
      ++covered;
    }
    advance(w, m);
    ++h;
  } while (w != start);
  return orbit_scan{h, covered};
}

}  // namespace gib
