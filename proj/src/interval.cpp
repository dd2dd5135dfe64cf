#include "refclass/interval.hpp"

#include <stdexcept>

namespace refclass {

Interval::Interval(Rational lo, Rational hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
  if (lo_ < 0 || hi_ > 1 || lo_ > hi_) {
    throw std::invalid_argument("invalid interval [" + refclass::to_string(lo_) + ", " +
                                refclass::to_string(hi_) + "]: need 0 <= lo <= hi <= 1");
  }
}

Interval Interval::reflect() const { return Interval(Rational(1) - hi_, Rational(1) - lo_); }

std::optional<Interval> Interval::intersect(const Interval& other) const {
  Rational lo = lo_ < other.lo_ ? other.lo_ : lo_;
  Rational hi = hi_ < other.hi_ ? hi_ : other.hi_;
  if (lo > hi) return std::nullopt;
  return Interval(std::move(lo), std::move(hi));
}

std::string Interval::to_string() const {
  return "[" + to_decimal_or_fraction(lo_) + ", " + to_decimal_or_fraction(hi_) + "]";
}

bool differ(const Interval& a, const Interval& b) { return !a.included_in(b) && !b.included_in(a); }

}  // namespace refclass
