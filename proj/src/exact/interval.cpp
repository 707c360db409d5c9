#include "bss/exact/interval.hpp"

#include "bss/errors.hpp"

#include <algorithm>

namespace bss {

RatInterval::RatInterval(Rational lo, Rational hi)
    : lo_(std::move(lo)), hi_(std::move(hi)) {
  if (hi_ < lo_)
    throw PreconditionError("interval with lo > hi");
}

int RatInterval::certain_sign() const {
  if (sgn(lo_) > 0)
    return 1;
  if (sgn(hi_) < 0)
    return -1;
  return 0;
}

RatInterval operator*(const RatInterval &a, const RatInterval &b) {
  Rational p[4] = {a.lo_ * b.lo_, a.lo_ * b.hi_, a.hi_ * b.lo_, a.hi_ * b.hi_};
  auto [mn, mx] = std::minmax_element(std::begin(p), std::end(p));
  return {*mn, *mx};
}

RatInterval RatInterval::pow(unsigned long n) const {
  if (n == 0)
    return RatInterval(Rational(1));
  Rational a = bss::pow(lo_, n), b = bss::pow(hi_, n);
  if (n % 2 == 1)
    return {a, b};
  if (sgn(lo_) >= 0)
    return {a, b};
  if (sgn(hi_) <= 0)
    return {b, a};
  return {Rational(0), std::max(a, b)};
}

std::string to_string(const RatInterval &i) {
  return "[" + to_string(i.lo()) + ", " + to_string(i.hi()) + "]";
}

} // namespace bss
