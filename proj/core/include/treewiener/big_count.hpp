#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace treewiener {

/// Exact nonnegative integer used for distance sums and vertex counts.
/// Distance sums grow like 8^t or [2(m+2)^2]^t, so nothing here is ever
/// narrowed to a fixed-width type.
using BigCount = boost::multiprecision::cpp_int;

/// Exact rational (average distance, mean first-passage time).
using Rational = boost::multiprecision::cpp_rational;

/// 128-bit accumulator for sums that provably fit (see call sites).
__extension__ typedef unsigned __int128 uint128;

inline BigCount to_big(uint128 v) {
  return (BigCount(static_cast<std::uint64_t>(v >> 64U)) << 64) + static_cast<std::uint64_t>(v);
}

inline BigCount pow_big(const BigCount& base, std::uint64_t exp) {
  BigCount result = 1;
  BigCount b = base;
  while (exp != 0) {
    if (exp & 1U) result *= b;
    exp >>= 1U;
    if (exp != 0) b *= b;
  }
  return result;
}

inline std::string to_string(const BigCount& v) { return v.str(); }

/// "p/q" for non-integers, plain "p" when the denominator is one.
inline std::string to_string(const Rational& r) {
  const BigCount& num = boost::multiprecision::numerator(r);
  const BigCount& den = boost::multiprecision::denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

}  // namespace treewiener
