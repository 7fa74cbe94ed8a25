#pragma once

#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace mrect {

// Exact coordinates. Coincidence of points must be decided exactly, so no
// floating point enters the combinatorial layer.
using Rational = boost::multiprecision::cpp_rational;

// Accepts "p/q", "-p/q" and plain integers. Throws InputError otherwise.
Rational parse_rational(std::string_view text);

// Lowest terms, positive denominator, always with an explicit "/q".
std::string format_rational(const Rational& r);

double to_double(const Rational& r);

}  // namespace mrect
