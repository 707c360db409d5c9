#include "bss/exact/rational_function.hpp"

#include "bss/errors.hpp"

namespace bss {

RationalFunction::RationalFunction(std::size_t arity)
    : num_(arity), den_(MultiPoly::constant(arity, AlgebraicNumber(1))) {}

RationalFunction::RationalFunction(const MultiPoly &num, const MultiPoly &den)
    : num_(num), den_(den) {
  if (num_.arity() != den_.arity())
    throw PreconditionError("arity mismatch");
  if (den_.is_zero())
    throw DivisionByZero();
  canonicalize();
}

RationalFunction::RationalFunction(const MultiPoly &poly)
    : num_(poly), den_(MultiPoly::constant(poly.arity(), AlgebraicNumber(1))) {}

RationalFunction RationalFunction::constant(std::size_t arity, const AlgebraicNumber &c) {
  return RationalFunction(MultiPoly::constant(arity, c));
}

RationalFunction RationalFunction::variable(std::size_t arity, std::size_t index) {
  return RationalFunction(MultiPoly::variable(arity, index));
}

void RationalFunction::canonicalize() {
  if (num_.is_zero()) {
    den_ = MultiPoly::constant(num_.arity(), AlgebraicNumber(1));
    return;
  }
  if (!den_.is_constant()) {
    MultiPoly g = gcd(num_, den_);
    if (!g.is_constant()) {
      num_ = *divide_exact(num_, g);
      den_ = *divide_exact(den_, g);
    }
  }
  AlgebraicNumber lead = den_.leading_term().second;
  if (!(lead == AlgebraicNumber(1))) {
    AlgebraicNumber inv = lead.inverse();
    num_ = inv * num_;
    den_ = inv * den_;
  }
}

std::optional<AlgebraicNumber> RationalFunction::constant_value() const {
  if (!is_constant())
    return std::nullopt;
  return num_.constant_value();
}

RationalFunction RationalFunction::operator-() const {
  return RationalFunction(-num_, den_, Canonical{});
}

RationalFunction operator+(const RationalFunction &a, const RationalFunction &b) {
  if (a.is_polynomial() && b.is_polynomial())
    return RationalFunction(a.num_ + b.num_, a.den_, RationalFunction::Canonical{});
  if (a.den_ == b.den_)
    return RationalFunction(a.num_ + b.num_, a.den_);
  return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunction operator-(const RationalFunction &a, const RationalFunction &b) {
  return a + (-b);
}

RationalFunction operator*(const RationalFunction &a, const RationalFunction &b) {
  if (a.is_polynomial() && b.is_polynomial())
    return RationalFunction(a.num_ * b.num_, a.den_, RationalFunction::Canonical{});
  return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
}

RationalFunction operator/(const RationalFunction &a, const RationalFunction &b) {
  if (b.is_zero())
    throw DivisionByZero();
  if (auto c = b.constant_value()) {
    AlgebraicNumber inv = c->inverse();
    return RationalFunction(inv * a.num_, a.den_, RationalFunction::Canonical{});
  }
  return RationalFunction(a.num_ * b.den_, a.den_ * b.num_);
}

AlgebraicNumber rf_eval(const RationalFunction &f, const std::vector<AlgebraicNumber> &x) {
  AlgebraicNumber d = f.denominator().eval(x);
  if (d.is_zero())
    throw PoleError();
  return f.numerator().eval(x) / d;
}

RationalFunction rf_arith(const RationalFunction &a, const RationalFunction &b, ArithOp op) {
  switch (op) {
  case ArithOp::Add:
    return a + b;
  case ArithOp::Sub:
    return a - b;
  case ArithOp::Mul:
    return a * b;
  case ArithOp::Div:
    return a / b;
  }
  throw Error("unknown arithmetic operation");
}

std::string to_string(const RationalFunction &f) {
  if (f.is_polynomial())
    return to_string(f.numerator());
  return "(" + to_string(f.numerator()) + ")/(" + to_string(f.denominator()) + ")";
}

} // namespace bss
