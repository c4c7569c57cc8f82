#pragma once

#include <boost/rational.hpp>

#include <cstdint>
#include <string>

namespace rmss {

/// Exact rank values. Ranks of code-induced q-polymatroids have denominators
/// dividing m, so 64-bit components are ample at desk scale.
using Rational = boost::rational<std::int64_t>;
// Compare against Rational values only: mixed comparisons with int literals
// recurse without bound in some Boost releases.

inline std::string to_string(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

inline bool is_integral(const Rational& r) { return r.denominator() == 1; }

}  // namespace rmss
