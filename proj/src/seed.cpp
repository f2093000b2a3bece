#include "gib/seed.hpp"

#include <numeric>
#include <string>

namespace gib {

seed validate_seed(std::vector<i64> terms) {
  if (terms.size() != 2 && terms.size() != 3) {
    throw wrong_arity("seed must have 2 or 3 terms, got " +
                      std::to_string(terms.size()));
  }
  i64 g = 0;
  for (const i64 t : terms) g = std::gcd(g, t);
  if (g != 1) {
    throw non_coprime_seed("seed terms share the common factor " +
                           std::to_string(g) +
                           "; the sequence is a multiple of another one");
  }
  return seed(std::move(terms));
}

}  // namespace gib
