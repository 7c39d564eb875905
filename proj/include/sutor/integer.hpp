#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <vector>

namespace sutor {

using Integer = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>, boost::multiprecision::et_off>;
using IntVector = std::vector<Integer>;

/// Least non-negative residue of `a` modulo `m` (m > 0).
inline Integer floor_mod(const Integer& a, const Integer& m) {
  Integer r = a % m;
  if (r < 0) r += m;
  return r;
}

inline Integer abs(const Integer& a) { return a < 0 ? Integer(-a) : a; }

inline std::string to_string(const Integer& a) { return a.str(); }

}  // namespace sutor
