#include "refclass/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace refclass {

namespace {

using Int = boost::multiprecision::cpp_int;

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    auto num = text.substr(0, slash);
    auto den = text.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) {
      throw std::invalid_argument("malformed fraction '" + std::string(text) + "'");
    }
    Int d{std::string(den)};
    if (d == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    return Rational(Int{std::string(num)}, d);
  }
  auto dot = text.find('.');
  auto whole = text.substr(0, dot);
  std::string_view frac;
  if (dot != std::string_view::npos) frac = text.substr(dot + 1);
  bool ok = (whole.empty() || all_digits(whole)) && (dot == std::string_view::npos || all_digits(frac)) &&
            !(whole.empty() && frac.empty());
  if (!ok) throw std::invalid_argument("malformed number '" + std::string(text) + "'");
  Int value = whole.empty() ? Int(0) : Int{std::string(whole)};
  Int scale = 1;
  for (char c : frac) {
    value = value * 10 + (c - '0');
    scale *= 10;
  }
  return Rational(value, scale);
}

std::string to_string(const Rational& value) {
  auto num = boost::multiprecision::numerator(value);
  auto den = boost::multiprecision::denominator(value);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

std::string to_decimal_or_fraction(const Rational& value) {
  Int num = boost::multiprecision::numerator(value);
  Int den = boost::multiprecision::denominator(value);
  // Terminating iff the reduced denominator has only factors 2 and 5.
  Int rest = den;
  int twos = 0, fives = 0;
  while (rest % 2 == 0) { rest /= 2; ++twos; }
  while (rest % 5 == 0) { rest /= 5; ++fives; }
  if (rest != 1 || num < 0) return to_string(value);
  int digits = std::max(twos, fives);
  Int scale = boost::multiprecision::pow(Int(10), static_cast<unsigned>(digits));
  Int scaled = num * (scale / den);
  Int whole = scaled / scale;
  Int frac = scaled % scale;
  if (digits == 0) return whole.str();
  std::string frac_str = frac.str();
  frac_str.insert(0, static_cast<std::size_t>(digits) - frac_str.size(), '0');
  while (!frac_str.empty() && frac_str.back() == '0') frac_str.pop_back();
  return whole.str() + "." + frac_str;
}

double to_double(const Rational& value) { return value.convert_to<double>(); }

}  // namespace refclass
