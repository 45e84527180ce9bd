#pragma once

#include <cstdint>
#include <limits>
#include <type_traits>

#include "mbs/error.hpp"

namespace mbs::checked {

// Built-in integers trap on overflow; any other type (e.g. a multiprecision
// integer) is assumed unbounded and uses its ordinary operators.

template <class Int>
Int add(const Int& a, const Int& b) {
  if constexpr (std::is_integral_v<Int>) {
    Int r;
    if (__builtin_add_overflow(a, b, &r)) throw OverflowError("integer overflow in addition");
    return r;
  } else {
    return a + b;
  }
}

template <class Int>
Int sub(const Int& a, const Int& b) {
  if constexpr (std::is_integral_v<Int>) {
    Int r;
    if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("integer overflow in subtraction");
    return r;
  } else {
    return a - b;
  }
}

template <class Int>
Int mul(const Int& a, const Int& b) {
  if constexpr (std::is_integral_v<Int>) {
    Int r;
    if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("integer overflow in multiplication");
    return r;
  } else {
    return a * b;
  }
}

/// Truncating division.
template <class Int>
Int div(const Int& a, const Int& b) {
  if constexpr (std::is_integral_v<Int>) {
    if (b == Int(-1) && a == std::numeric_limits<Int>::min()) throw OverflowError("integer overflow in division");
  }
  return a / b;
}

template <class Int>
Int neg(const Int& a) {
  return sub(Int(0), a);
}

template <class Int>
Int abs(const Int& a) {
  return a < Int(0) ? neg(a) : a;
}

/// a - q*b
template <class Int>
Int sub_mul(const Int& a, const Int& q, const Int& b) {
  return sub(a, mul(q, b));
}

/// Product of unsigned counts; throws LimitError rather than wrapping.
inline std::uint64_t count_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw LimitError("search space size exceeds 2^64");
  return r;
}

}  // namespace mbs::checked
