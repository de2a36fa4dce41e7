#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace powergraph {

// All counts in this library are bounded by n < 2^63, so 128-bit intermediates
// give ample headroom for the multiply-before-divide rearrangements of the
// closed forms. Overflow is always reported, never wrapped.
using u128 = unsigned __int128;

[[noreturn]] inline void throw_overflow(const char* op) {
  throw std::overflow_error(std::string("integer overflow in ") + op);
}

inline u128 checked_add(u128 a, u128 b) {
  u128 r = a + b;
  if (r < a) throw_overflow("addition");
  return r;
}

inline u128 checked_sub(u128 a, u128 b) {
  if (b > a) throw_overflow("subtraction (underflow)");
  return a - b;
}

inline u128 checked_mul(u128 a, u128 b) {
  if (a != 0 && b > ~u128{0} / a) throw_overflow("multiplication");
  return a * b;
}

inline u128 checked_pow(u128 base, unsigned exp) {
  u128 r = 1;
  for (; exp > 0; --exp) r = checked_mul(r, base);
  return r;
}

// Division that must leave no remainder; a remainder means a closed form was
// rearranged incorrectly.
inline u128 exact_div(u128 a, u128 b) {
  if (b == 0 || a % b != 0) throw std::logic_error("exact_div: not divisible");
  return a / b;
}

inline std::uint64_t narrow_u64(u128 v, const char* what) {
  if (v > u128{UINT64_MAX}) throw_overflow(what);
  return static_cast<std::uint64_t>(v);
}

inline std::string u128_to_string(u128 v) {
  if (v == 0) return "0";
  std::string s;
  while (v > 0) {
    s.push_back(static_cast<char>('0' + static_cast<int>(v % 10)));
    v /= 10;
  }
  std::reverse(s.begin(), s.end());
  return s;
}

}  // namespace powergraph
