#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace lhc {

/// Arbitrary-precision signed integer used for all lattice arithmetic.
using Int = boost::multiprecision::cpp_int;

/// Arbitrary-precision rational, used only where exact division is unavoidable.
using Rat = boost::multiprecision::cpp_rational;

/// Floor division. Requires b != 0. Unlike operator/ (which truncates toward
/// zero), this rounds toward negative infinity, so div_floor(-1, 5) == -1.
inline Int div_floor(const Int& a, const Int& b) {
    Int q = a / b;
    Int r = a % b;
    if (r != 0 && ((r < 0) != (b < 0))) --q;
    return q;
}

/// Ceiling division. Requires b != 0.
inline Int div_ceil(const Int& a, const Int& b) {
    return -div_floor(-a, b);
}

/// Nonnegative gcd; gcd_int(0, 0) == 0.
inline Int gcd_int(const Int& a, const Int& b) {
    return gcd(a, b);
}

}  // namespace lhc
