#pragma once

#include <cstdint>
#include <numeric>

#include "kfk/error.hpp"

// Overflow-checked int64 arithmetic. Every overflow is an Error, never a wrap.
namespace kfk::checked {

using i64 = std::int64_t;

inline i64 add(i64 a, i64 b) {
  i64 r;
  if (__builtin_add_overflow(a, b, &r)) throw Error(ErrorCode::Overflow, "integer addition");
  return r;
}

inline i64 sub(i64 a, i64 b) {
  i64 r;
  if (__builtin_sub_overflow(a, b, &r)) throw Error(ErrorCode::Overflow, "integer subtraction");
  return r;
}

inline i64 mul(i64 a, i64 b) {
  i64 r;
  if (__builtin_mul_overflow(a, b, &r)) throw Error(ErrorCode::Overflow, "integer multiplication");
  return r;
}

inline i64 neg(i64 a) { return sub(0, a); }

inline i64 abs(i64 a) { return a < 0 ? neg(a) : a; }

inline i64 gcd(i64 a, i64 b) { return std::gcd(abs(a), abs(b)); }

inline i64 lcm(i64 a, i64 b) {
  if (a == 0 || b == 0) return 0;
  return mul(abs(a) / gcd(a, b), abs(b));
}

/// Least non-negative residue of a modulo m (m > 0).
inline i64 mod(i64 a, i64 m) {
  i64 r = a % m;
  return r < 0 ? r + m : r;
}

}  // namespace kfk::checked
