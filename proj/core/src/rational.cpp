#include "tropvol/rational.hpp"

#include <cctype>
#include <string>

#include "tropvol/error.hpp"

namespace tropvol {

namespace {

constexpr std::string_view kModule = "exact_num";

bool is_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char ch : s) {
    if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
  }
  return true;
}

Integer parse_integer(std::string_view text, std::string_view whole) {
  std::string_view digits = text;
  bool negative = false;
  if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) {
    negative = digits.front() == '-';
    digits.remove_prefix(1);
  }
  if (!is_digits(digits)) {
    throw Error(ErrorCode::ParseError, kModule,
                "not a rational number: '" + std::string(whole) + "'");
  }
  Integer value{std::string(digits)};
  return negative ? Integer(-value) : value;
}

}  // namespace

std::string to_fraction_string(const Rational& r) {
  return boost::multiprecision::numerator(r).str() + "/" +
         boost::multiprecision::denominator(r).str();
}

std::string to_display_string(const Rational& r) {
  if (is_integer(r)) return boost::multiprecision::numerator(r).str();
  return to_fraction_string(r);
}

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text, text));
  Integer num = parse_integer(text.substr(0, slash), text);
  std::string_view den_text = text.substr(slash + 1);
  if (!is_digits(den_text)) {
    throw Error(ErrorCode::ParseError, kModule,
                "bad denominator in '" + std::string(text) + "'");
  }
  Integer den{std::string(den_text)};
  if (den == 0) {
    throw Error(ErrorCode::ParseError, kModule, "zero denominator in '" + std::string(text) + "'");
  }
  return Rational(num, den);
}

Integer factorial(unsigned n) {
  Integer result = 1;
  for (unsigned k = 2; k <= n; ++k) result *= k;
  return result;
}

Rational pow(const Rational& base, unsigned exponent) {
  Rational result = 1;
  for (unsigned k = 0; k < exponent; ++k) result *= base;
  return result;
}

bool is_integer(const Rational& r) { return boost::multiprecision::denominator(r) == 1; }

Integer floor(const Rational& r) {
  const Integer& num = boost::multiprecision::numerator(r);
  const Integer& den = boost::multiprecision::denominator(r);
  Integer q = num / den;  // truncates toward zero
  if (num < 0 && q * den != num) q -= 1;
  return q;
}

Integer ceil(const Rational& r) { return -floor(Rational(-r)); }

double to_double(const Rational& r) { return r.convert_to<double>(); }

}  // namespace tropvol
