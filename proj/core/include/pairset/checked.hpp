#pragma once

#include <cstdint>
#include <string>

#include "pairset/errors.hpp"

namespace pairset {

/// Signed count type used throughout. All arithmetic on it that can grow
/// goes through the checked helpers below.
using Int = std::int64_t;

inline Int checked_add(Int a, Int b) {
  Int out;
  if (__builtin_add_overflow(a, b, &out))
    throw OverflowError("integer overflow in " + std::to_string(a) + " + " + std::to_string(b));
  return out;
}

inline Int checked_sub(Int a, Int b) {
  Int out;
  if (__builtin_sub_overflow(a, b, &out))
    throw OverflowError("integer overflow in " + std::to_string(a) + " - " + std::to_string(b));
  return out;
}

inline Int checked_mul(Int a, Int b) {
  Int out;
  if (__builtin_mul_overflow(a, b, &out))
    throw OverflowError("integer overflow in " + std::to_string(a) + " * " + std::to_string(b));
  return out;
}

}  // namespace pairset
