#pragma once

#include <cstdint>
#include <string>

#include <boost/rational.hpp>

// Boost 1.74's mixed rational/integer equality recurses forever under C++20 rewritten
// comparisons. Exact non-template overloads that compare the parts directly take
// priority and break the cycle.
namespace boost {
inline bool operator==(const rational<std::int64_t>& r, std::int64_t i) {
  return r.denominator() == 1 && r.numerator() == i;
}
inline bool operator==(const rational<std::int64_t>& r, int i) { return r == static_cast<std::int64_t>(i); }
}  // namespace boost

namespace ultralat {

using Rational = boost::rational<std::int64_t>;

inline std::string to_string(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

/// Parses "p", "-p", "p/q". Throws ultralat::Error on malformed input.
Rational parse_rational(const std::string& text);

inline double to_double(const Rational& r) {
  return static_cast<double>(r.numerator()) / static_cast<double>(r.denominator());
}

}  // namespace ultralat
