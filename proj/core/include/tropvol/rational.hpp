#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <string>
#include <string_view>

namespace tropvol {

using Integer = boost::multiprecision::mpz_int;
// GMP keeps mpq values canonical: lowest terms with a positive denominator.
using Rational = boost::multiprecision::mpq_rational;

// "p/q" always, including "3/1"; used by machine-readable output.
std::string to_fraction_string(const Rational& r);
// "3" for integers, "352/3" otherwise; used by human-readable output.
std::string to_display_string(const Rational& r);
// Accepts "p", "-p", "p/q". Throws Error(ParseError) on anything else or q == 0.
Rational parse_rational(std::string_view text);

Integer factorial(unsigned n);
Rational pow(const Rational& base, unsigned exponent);
bool is_integer(const Rational& r);
Integer floor(const Rational& r);
Integer ceil(const Rational& r);
double to_double(const Rational& r);

}  // namespace tropvol
