#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace ribbon {

using BigInt = boost::multiprecision::cpp_int;
// Always kept in reduced form with a positive denominator.
using Rational = boost::multiprecision::cpp_rational;

}  // namespace ribbon
