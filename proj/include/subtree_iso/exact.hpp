#pragma once

#include <cstdint>
#include <string>

#include "error.hpp"

// Exact comparisons against bounds with fractional exponents (5^{n/4},
// 2^{n/2}). Both sides are raised to an integer power so every verdict is
// decided in integer arithmetic. Values are 128-bit; overflow raises
// ResourceLimit instead of wrapping.

namespace subtree_iso::exact {

using Wide = unsigned __int128;

inline Wide mul(Wide a, Wide b) {
  Wide r;
  if (__builtin_mul_overflow(a, b, &r)) throw ResourceLimit("128-bit overflow in exact bound comparison");
  return r;
}

inline Wide pow(Wide base, unsigned exp) {
  Wide r = 1;
  for (unsigned i = 0; i < exp; ++i) r = mul(r, base);
  return r;
}

inline Wide fourth(Wide x) { return pow(x, 4); }

/// value <= 5^{n/4}
inline bool at_most_pow5_quarter(std::uint64_t value, unsigned n) {
  return fourth(value) <= pow(5, n);
}

/// value <= 5^{n/4} - 1, i.e. (value + 1)^4 <= 5^n.
inline bool at_most_pow5_quarter_minus_one(std::uint64_t value, unsigned n) {
  return fourth(Wide(value) + 1) <= pow(5, n);
}

/// value >= 2 * 5^{n/4 - 2}, i.e. value^4 * 5^8 >= 16 * 5^n.
/// Factors of 5 are cancelled first so the comparison stays in range for large n.
inline bool at_least_lower_bound(std::uint64_t value, unsigned n) {
  if (value == 0) return false;
  unsigned k = 0;
  while (value % 5 == 0) {
    value /= 5;
    ++k;
  }
  const unsigned lhs_exp = 4 * k + 8;
  if (lhs_exp >= n + 2) return true;
  if (lhs_exp >= n) return mul(fourth(value), pow(5, lhs_exp - n)) >= 16;
  return fourth(value) >= mul(16, pow(5, n - lhs_exp));
}

/// value <= 3 * 2^{n/2 - 1}, i.e. 4 * value^2 <= 9 * 2^n.
inline bool at_most_three_half_pow2(std::uint64_t value, unsigned n) {
  return mul(4, mul(value, value)) <= mul(9, pow(2, n));
}

/// s <= r + 3 * 2^{n/2 - 1}
inline bool within_centroid_gap(std::uint64_t s, std::uint64_t r, unsigned n) {
  return s <= r || at_most_three_half_pow2(s - r, n);
}

inline std::string to_string(Wide v) {
  if (v == 0) return "0";
  std::string s;
  while (v > 0) {
    s.insert(s.begin(), static_cast<char>('0' + static_cast<int>(v % 10)));
    v /= 10;
  }
  return s;
}

}  // namespace subtree_iso::exact
