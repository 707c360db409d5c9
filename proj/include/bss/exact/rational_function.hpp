#pragma once

#include "bss/exact/multipoly.hpp"

#include <string>
#include <vector>

namespace bss {

/// A quotient of polynomials in canonical form: numerator and denominator
/// share no nonconstant factor, and the denominator's leading coefficient
/// (graded lex) is 1. Equal functions therefore compare equal term by term.
class RationalFunction {
public:
  explicit RationalFunction(std::size_t arity = 0);
  RationalFunction(const MultiPoly &num, const MultiPoly &den);
  explicit RationalFunction(const MultiPoly &poly);

  static RationalFunction constant(std::size_t arity, const AlgebraicNumber &c);
  static RationalFunction variable(std::size_t arity, std::size_t index);

  std::size_t arity() const { return num_.arity(); }
  const MultiPoly &numerator() const { return num_; }
  const MultiPoly &denominator() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
  std::optional<AlgebraicNumber> constant_value() const;
  bool is_polynomial() const { return den_.is_constant(); }

  RationalFunction operator-() const;
  friend RationalFunction operator+(const RationalFunction &a, const RationalFunction &b);
  friend RationalFunction operator-(const RationalFunction &a, const RationalFunction &b);
  friend RationalFunction operator*(const RationalFunction &a, const RationalFunction &b);
  /// Throws DivisionByZero when b is the zero function.
  friend RationalFunction operator/(const RationalFunction &a, const RationalFunction &b);
  friend bool operator==(const RationalFunction &a, const RationalFunction &b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

private:
  struct Canonical {};
  RationalFunction(MultiPoly num, MultiPoly den, Canonical)
      : num_(std::move(num)), den_(std::move(den)) {}
  void canonicalize();

  MultiPoly num_, den_;
};

/// Exact value at a point; throws PoleError when the denominator vanishes.
AlgebraicNumber rf_eval(const RationalFunction &f, const std::vector<AlgebraicNumber> &x);

RationalFunction rf_arith(const RationalFunction &a, const RationalFunction &b, ArithOp op);

/// "num" for polynomials, otherwise "(num)/(den)".
std::string to_string(const RationalFunction &f);

} // namespace bss
