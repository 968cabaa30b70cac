#include "rellich/rational.hpp"

#include <cctype>
#include <cmath>
#include <string>

#include "rellich/errors.hpp"

namespace rellich {
namespace {

BigInt pow10(long e) {
  BigInt r = 1;
  for (long i = 0; i < e; ++i) r *= 10;
  return r;
}

Rational parse_decimal(std::string_view s, std::string_view full) {
  auto fail = [&] { throw InvalidArgument("not a number: '" + std::string(full) + "'"); };
  if (s.empty()) fail();

  bool negative = false;
  if (s.front() == '+' || s.front() == '-') {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }

  std::string digits;
  long scale = 0;  // value = digits * 10^-scale
  bool seen_point = false;
  bool seen_digit = false;
  std::size_t i = 0;
  for (; i < s.size(); ++i) {
    const char c = s[i];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      digits.push_back(c);
      seen_digit = true;
      if (seen_point) ++scale;
    } else if (c == '.' && !seen_point) {
      seen_point = true;
    } else {
      break;
    }
  }
  if (!seen_digit) fail();

  if (i < s.size()) {
    if (s[i] != 'e' && s[i] != 'E') fail();
    std::string_view ex = s.substr(i + 1);
    if (ex.empty()) fail();
    bool ex_negative = false;
    if (ex.front() == '+' || ex.front() == '-') {
      ex_negative = ex.front() == '-';
      ex.remove_prefix(1);
    }
    if (ex.empty() || ex.size() > 6) fail();
    long e = 0;
    for (char c : ex) {
      if (!std::isdigit(static_cast<unsigned char>(c))) fail();
      e = 10 * e + (c - '0');
    }
    scale += ex_negative ? e : -e;
  }

  // cpp_int reads a leading 0 as an octal prefix.
  const auto nz = digits.find_first_not_of('0');
  const BigInt num(nz == std::string::npos ? std::string("0") : digits.substr(nz));
  Rational r = scale >= 0 ? Rational(num, pow10(scale)) : Rational(num * pow10(-scale));
  return negative ? Rational(-r) : r;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const std::string_view s = trim(text);
  const auto slash = s.find('/');
  if (slash == std::string_view::npos) return parse_decimal(s, text);
  const Rational num = parse_decimal(trim(s.substr(0, slash)), text);
  const Rational den = parse_decimal(trim(s.substr(slash + 1)), text);
  if (den == 0) throw InvalidArgument("zero denominator in '" + std::string(text) + "'");
  return num / den;
}

Rational to_rational(double value) {
  if (!std::isfinite(value)) throw InvalidArgument("non-finite value has no rational form");
  if (value == 0.0) return Rational(0);
  int exponent = 0;
  const double mantissa = std::frexp(value, &exponent);  // value = mantissa * 2^exponent
  // 53-bit integer mantissa.
  const auto scaled = static_cast<long long>(std::ldexp(mantissa, 53));
  exponent -= 53;
  BigInt num(scaled);
  if (exponent >= 0) return Rational(num << exponent);
  return Rational(num, BigInt(1) << (-exponent));
}

double to_double(const Rational& value) { return value.convert_to<double>(); }

std::string to_string(const Rational& value) {
  const BigInt num = boost::multiprecision::numerator(value);
  const BigInt den = boost::multiprecision::denominator(value);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

}  // namespace rellich
