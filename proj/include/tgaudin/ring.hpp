#pragma once

#include "tgaudin/rational.hpp"

namespace tgaudin {

namespace detail {

// Called from inside class templates whose member `is_zero()` would
// otherwise hide the free overloads found by argument-dependent lookup.
template <class T>
bool elem_is_zero(const T& x) {
  return is_zero(x);
}

}  // namespace detail

/// x * c for a rational scalar c. Containers provide more specific overloads.
template <class T>
T scale_by(const T& x, const Rational& c) {
  return x * T(c);
}

inline Rational scale_by(const Rational& x, const Rational& c) { return x * c; }

}  // namespace tgaudin
