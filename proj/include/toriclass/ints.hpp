#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace toriclass {

// Arbitrary-precision integers everywhere; pivoting in the normal-form
// routines can blow past any fixed width even on small inputs.
using Int = boost::multiprecision::cpp_int;

inline Int abs_int(const Int& x) { return x < 0 ? Int(-x) : x; }

inline Int gcd_int(const Int& a, const Int& b) {
  return boost::multiprecision::gcd(a, b);
}

// Floor division for b > 0.
inline Int floor_div(const Int& a, const Int& b) {
  Int q = a / b;
  if (a % b != 0 && a < 0) --q;
  return q;
}

}  // namespace toriclass
