#pragma once

#include <cstdint>
#include <numeric>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace lyndon2d {

/// Arbitrary-precision nonnegative integer. LCM_m of an m-row matrix can be
/// exponential in m, so shifts and LCM prefixes are held in this type.
using BigNat = boost::multiprecision::cpp_int;

/// Row periods and offsets are always machine words.
using Word = std::uint64_t;

inline Word mod_word(const BigNat& a, Word n) {
  return static_cast<Word>(a % n);
}

/// gcd(a, n) with one big-integer modulus followed by word-sized Euclid.
inline Word gcd_word(const BigNat& a, Word n) {
  return std::gcd(mod_word(a, n), n);
}

inline std::string to_decimal(const BigNat& a) { return a.str(); }

/// Parses a nonnegative decimal string. Throws std::runtime_error on garbage.
inline BigNat from_decimal(const std::string& s) { return BigNat(s); }

} // namespace lyndon2d
