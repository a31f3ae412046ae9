#pragma once

#include <cstdint>
#include <limits>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

#include "lingrowth/error.hpp"

namespace lingrowth {

// Exact arithmetic for every bound comparison. Arbitrary precision, so powers
// such as (1 - 1/4c)^i never overflow.
using rational = boost::multiprecision::cpp_rational;
using big_int = boost::multiprecision::cpp_int;

inline big_int floor_of(const rational& x) {
  const big_int num = boost::multiprecision::numerator(x);
  const big_int den = boost::multiprecision::denominator(x);
  big_int q = num / den;  // truncates toward zero
  if (num < 0 && q * den != num) q -= 1;
  return q;
}

inline big_int ceil_of(const rational& x) { return -floor_of(-x); }

inline std::int64_t to_int64(const big_int& v) {
  if (v > std::numeric_limits<std::int64_t>::max() ||
      v < std::numeric_limits<std::int64_t>::min()) {
    throw capacity_error("integer " + v.str() + " does not fit in 64 bits");
  }
  return static_cast<std::int64_t>(v);
}

// "p/q" or "p"; canonical form, so to_string(parse_rational(s)) normalizes s.
inline std::string to_string(const rational& x) {
  const big_int den = boost::multiprecision::denominator(x);
  if (den == 1) return boost::multiprecision::numerator(x).str();
  return boost::multiprecision::numerator(x).str() + "/" + den.str();
}

inline rational parse_rational(std::string_view text) {
  auto parse_int = [&](std::string_view part) -> big_int {
    std::size_t i = 0;
    if (!part.empty() && (part[0] == '-' || part[0] == '+')) i = 1;
    if (i == part.size()) throw parse_error("malformed rational '" + std::string(text) + "'");
    for (std::size_t k = i; k < part.size(); ++k) {
      if (part[k] < '0' || part[k] > '9') {
        throw parse_error("malformed rational '" + std::string(text) + "'");
      }
    }
    return big_int(std::string(part));
  };
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return rational(parse_int(text));
  const big_int num = parse_int(text.substr(0, slash));
  const big_int den = parse_int(text.substr(slash + 1));
  if (den == 0) throw parse_error("zero denominator in '" + std::string(text) + "'");
  return rational(num, den);
}

}  // namespace lingrowth
