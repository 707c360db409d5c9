#pragma once

#include "bss/exact/rational.hpp"

#include <string>

namespace bss {

/// Closed interval [lo, hi] with rational endpoints, lo <= hi.
class RatInterval {
public:
  RatInterval() = default;
  explicit RatInterval(const Rational &point) : lo_(point), hi_(point) {}
  RatInterval(Rational lo, Rational hi);

  const Rational &lo() const { return lo_; }
  const Rational &hi() const { return hi_; }
  Rational width() const { return hi_ - lo_; }
  Rational midpoint() const { return (lo_ + hi_) / 2; }

  bool contains(const Rational &x) const { return lo_ <= x && x <= hi_; }
  bool contains(const RatInterval &o) const {
    return lo_ <= o.lo_ && o.hi_ <= hi_;
  }
  bool excludes_zero() const { return sgn(lo_) > 0 || sgn(hi_) < 0; }
  /// Sign shared by every point, or 0 when the interval touches zero.
  int certain_sign() const;

  RatInterval operator-() const { return {-hi_, -lo_}; }
  RatInterval pow(unsigned long n) const;

  friend RatInterval operator+(const RatInterval &a, const RatInterval &b) {
    return {a.lo_ + b.lo_, a.hi_ + b.hi_};
  }
  friend RatInterval operator-(const RatInterval &a, const RatInterval &b) {
    return {a.lo_ - b.hi_, a.hi_ - b.lo_};
  }
  friend RatInterval operator*(const RatInterval &a, const RatInterval &b);
  friend bool operator==(const RatInterval &a, const RatInterval &b) {
    return a.lo_ == b.lo_ && a.hi_ == b.hi_;
  }

private:
  Rational lo_, hi_;
};

std::string to_string(const RatInterval &i);

} // namespace bss
