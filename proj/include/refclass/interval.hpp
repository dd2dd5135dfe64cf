#pragma once

#include "refclass/rational.hpp"

#include <optional>
#include <string>

namespace refclass {

// Closed sub-interval [lo, hi] of [0, 1] with exact endpoints.
class Interval {
 public:
  // Throws std::invalid_argument unless 0 <= lo <= hi <= 1.
  Interval(Rational lo, Rational hi);

  static Interval point(const Rational& x) { return Interval(x, x); }
  static Interval unit() { return Interval(Rational(0), Rational(1)); }

  const Rational& lo() const { return lo_; }
  const Rational& hi() const { return hi_; }

  bool is_point() const { return lo_ == hi_; }
  bool is_unit() const { return lo_ == 0 && hi_ == 1; }
  bool contains(const Rational& x) const { return lo_ <= x && x <= hi_; }
  // this ⊆ other
  bool included_in(const Interval& other) const { return other.lo_ <= lo_ && hi_ <= other.hi_; }

  // [1 - hi, 1 - lo]: the proportion of the complementary property.
  Interval reflect() const;

  // Empty intersection yields nullopt.
  std::optional<Interval> intersect(const Interval& other) const;

  std::string to_string() const;

  friend bool operator==(const Interval& a, const Interval& b) { return a.lo_ == b.lo_ && a.hi_ == b.hi_; }
  friend bool operator<(const Interval& a, const Interval& b) {
    return a.lo_ < b.lo_ || (a.lo_ == b.lo_ && a.hi_ < b.hi_);
  }

 private:
  Rational lo_;
  Rational hi_;
};

// Neither interval is included in the other. On points this is plain inequality.
bool differ(const Interval& a, const Interval& b);

}  // namespace refclass
