#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace funcwalk {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Euclidean remainder: always in [0, m), also for negative values.
Int euclid_mod(const Int& value, const Int& m);

double to_double(const Rational& r);

/// "p/q", or just "p" when the denominator is 1.
std::string rational_string(const Rational& r);

}  // namespace funcwalk
