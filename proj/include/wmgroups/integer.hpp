#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace wm {

/// Arbitrary precision integer used for every scalar: elements of Z,
/// group-ring coefficients, matrix entries.
using Integer = boost::multiprecision::cpp_int;

inline std::string to_string(const Integer& x) { return x.str(); }

inline Integer abs(const Integer& x) { return x < 0 ? Integer(-x) : x; }

/// Remainder in [0, |m|).
inline Integer mod_floor(const Integer& x, const Integer& m) {
  Integer r = x % m;
  if (r < 0) r += abs(m);
  return r;
}

}  // namespace wm
