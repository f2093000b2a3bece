#pragma once

#include <stdexcept>

namespace gib {

// Base class for all library errors.
class error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Seed terms share a common factor greater than 1. Such a sequence is an
// entrywise multiple of another sequence and is excluded by construction.
class non_coprime_seed : public error {
 public:
  using error::error;
};

// A seed or window has a length other than 2 or 3, or an operation that
// requires a specific order was given the wrong one.
class wrong_arity : public error {
 public:
  using error::error;
};

// Two cycles with different moduli or recurrence orders were compared.
class modulus_mismatch : public error {
 public:
  using error::error;
};

// An enumeration or iteration would exceed its configured budget.
class resource_limit : public error {
 public:
  using error::error;
};

// A conditional check was invoked on inputs outside its hypothesis.
class hypothesis_not_met : public error {
 public:
  using error::error;
};

// A destination file could not be written.
class io_error : public error {
 public:
  using error::error;
};

}  // namespace gib
