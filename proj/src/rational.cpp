#include "spanoid/rational.hpp"

#include <stdexcept>

namespace spanoid {

std::string to_string(const Rational& q) {
  Integer num = boost::multiprecision::numerator(q);
  Integer den = boost::multiprecision::denominator(q);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

Rational parse_rational(const std::string& text) {
  auto valid_int = [](const std::string& s) {
    std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
      if (s[i] < '0' || s[i] > '9') return false;
    return true;
  };
  auto slash = text.find('/');
  std::string num = text.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den) || den[0] == '-' || den[0] == '+')
    throw std::invalid_argument("not a rational literal: '" + text + "'");
  Integer d(den);
  if (d == 0) throw std::invalid_argument("zero denominator in '" + text + "'");
  return Rational(Integer(num), d);
}

double to_double(const Rational& q) { return q.convert_to<double>(); }

Integer floor_div(const Rational& q) {
  Integer num = boost::multiprecision::numerator(q);
  Integer den = boost::multiprecision::denominator(q);
  Integer r = num / den;
  if (num < 0 && r * den != num) r -= 1;
  return r;
}

Integer ceil(const Rational& q) {
  Integer f = floor_div(q);
  return Rational(f) == q ? f : f + 1;
}

}  // namespace spanoid
