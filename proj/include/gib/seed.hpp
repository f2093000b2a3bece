#pragma once

#include <cstdint>
#include <vector>

#include "gib/errors.hpp"

namespace gib {

using i64 = std::int64_t;

// Initial terms of an order-2 or order-3 additive sequence. Terms may be
// negative or large; they are reduced into [0, m) only when a modulus is
// applied. The terms must be coprime as a whole, which rules out entrywise
// multiples of other sequences.
class seed {
 public:
  int order() const noexcept { return static_cast<int>(terms_.size()); }
  const std::vector<i64>& terms() const noexcept { return terms_; }

  bool operator==(const seed&) const = default;

  friend seed validate_seed(std::vector<i64> terms);

 private:
  explicit seed(std::vector<i64> terms) noexcept : terms_(std::move(terms)) {}

  std::vector<i64> terms_;
};

// Throws wrong_arity unless terms has length 2 or 3, and non_coprime_seed
// unless the gcd of all terms is 1.
seed validate_seed(std::vector<i64> terms);

inline seed fibonacci_seed() { return validate_seed({1, 1}); }
inline seed lucas_seed() { return validate_seed({1, 3}); }

}  // namespace gib
