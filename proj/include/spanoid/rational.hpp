#pragma once

#include <string>

#include <boost/multiprecision/gmp.hpp>

namespace spanoid {

using Rational = boost::multiprecision::mpq_rational;
using Integer = boost::multiprecision::mpz_int;

// "p/q" in lowest terms, or "p" when the denominator is 1.
std::string to_string(const Rational& q);

// Accepts "p", "-p" or "p/q". Throws std::invalid_argument.
Rational parse_rational(const std::string& text);

double to_double(const Rational& q);

Integer floor_div(const Rational& q);
Integer ceil(const Rational& q);

}  // namespace spanoid
