#include "longrun/rational.hpp"

#include <cctype>
#include <cstdio>
#include <stdexcept>

namespace longrun {

namespace {

bool all_digits(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

std::string trimmed(const std::string& text) {
  std::size_t b = 0, e = text.size();
  while (b < e && std::isspace(static_cast<unsigned char>(text[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(text[e - 1]))) --e;
  return text.substr(b, e - b);
}

[[noreturn]] void bad(const std::string& text) {
  throw std::invalid_argument("not a rational literal: '" + text + "'");
}

}  // namespace

Rational parse_rational(const std::string& text) {
  std::string s = trimmed(text);
  if (s.empty()) bad(text);
  bool negative = false;
  if (s[0] == '+' || s[0] == '-') {
    negative = s[0] == '-';
    s.erase(0, 1);
  }
  if (s.empty()) bad(text);

  Rational value;
  if (auto slash = s.find('/'); slash != std::string::npos) {
    const std::string num = s.substr(0, slash), den = s.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) bad(text);
    BigInt q(den);
    if (q == 0) throw std::invalid_argument("zero denominator: '" + text + "'");
    value = Rational(BigInt(num), q);
  } else if (auto dot = s.find('.'); dot != std::string::npos) {
    const std::string whole = s.substr(0, dot), frac = s.substr(dot + 1);
    if (frac.size() > 12)
      throw std::invalid_argument("more than 12 fractional digits: '" + text + "'");
    if ((!whole.empty() && !all_digits(whole)) || !all_digits(frac)) bad(text);
    BigInt scale = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
    BigInt n = whole.empty() ? BigInt(0) : BigInt(whole);
    value = Rational(n * scale + BigInt(frac), scale);
  } else {
    if (!all_digits(s)) bad(text);
    value = Rational(BigInt(s));
  }
  return negative ? Rational(-value) : value;
}

std::string format_rational(const Rational& value) {
  if (denominator(value) == 1) return numerator(value).str();
  return numerator(value).str() + "/" + denominator(value).str();
}

double to_double(const Rational& value) { return value.convert_to<double>(); }

Rational rational_from_decimal(double value) {
  if (!(value > -1e6 && value < 1e6))
    throw std::invalid_argument("decimal literal out of supported range");
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12f", value);
  return parse_rational(buf);
}

std::int64_t ceil_div(const Rational& numerator_value, const Rational& denominator_value) {
  if (denominator_value <= 0) throw std::invalid_argument("ceil_div needs positive denominator");
  const Rational q = numerator_value / denominator_value;
  const BigInt n = numerator(q), d = denominator(q);
  BigInt fl = n / d;
  if (n < 0 && n % d != 0) --fl;          // floor for negatives
  if (fl * d != n) ++fl;                  // ceil
  return fl.convert_to<std::int64_t>();
}

}  // namespace longrun
