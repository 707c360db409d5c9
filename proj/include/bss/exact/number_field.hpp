#pragma once

#include "bss/exact/interval.hpp"
#include "bss/exact/sturm.hpp"
#include "bss/exact/unipoly.hpp"

#include <memory>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

namespace bss {

class NumberField;
using FieldPtr = std::shared_ptr<const NumberField>;

/// Q(alpha) for a real algebraic alpha, given by its monic minimal polynomial
/// and an interval isolating alpha among the real roots.
class NumberField {
public:
  /// Normalizes min_poly to monic. Throws PreconditionError when the interval
  /// does not isolate exactly one root, an endpoint is a root, or min_poly is
  /// visibly reducible (repeated factors; a rational root for degree <= 3).
  static FieldPtr create(const UniPoly &min_poly, const RatInterval &isolating,
                         std::string name = "");
  /// Q itself, presented as Q(0) with min_poly X.
  static const FieldPtr &rationals();

  const UniPoly &min_poly() const { return min_poly_; }
  const RatInterval &isolating_interval() const { return interval_; }
  std::size_t degree() const { return static_cast<std::size_t>(min_poly_.degree()); }
  const std::string &name() const { return name_; }
  const SturmSequence &sturm() const { return sturm_; }

  /// An interval of width <= max_width around alpha. Refinements are cached.
  RatInterval root_enclosure(const Rational &max_width) const;

  /// Same minimal polynomial and the two intervals isolate the same root.
  bool same_as(const NumberField &other) const;

private:
  NumberField(UniPoly min_poly, RatInterval interval, std::string name);

  UniPoly min_poly_;
  RatInterval interval_;
  std::string name_;
  SturmSequence sturm_;
  mutable std::mutex cache_mutex_;
  mutable RatInterval best_;
};

enum class ArithOp { Add, Sub, Mul, Div };

/// An element of a NumberField, in coordinates over the basis
/// 1, alpha, ..., alpha^(degree-1).
class AlgebraicNumber {
public:
  AlgebraicNumber();
  AlgebraicNumber(const Rational &q); // NOLINT: rationals embed everywhere
  AlgebraicNumber(long v) : AlgebraicNumber(Rational(v)) {} // NOLINT
  AlgebraicNumber(FieldPtr field, std::vector<Rational> coords);

  static AlgebraicNumber generator(const FieldPtr &field);

  const FieldPtr &field() const { return field_; }
  const std::vector<Rational> &coords() const { return coords_; }

  bool is_zero() const;
  /// The value when it is rational.
  std::optional<Rational> as_rational() const;
  bool is_rational() const { return as_rational().has_value(); }

  /// Rational interval of width <= max_width containing the value.
  RatInterval enclosure(const Rational &max_width) const;

  /// Re-expresses this value in `field` (allowed when the fields agree or the
  /// value is rational). Throws FieldMismatch otherwise.
  AlgebraicNumber lift_to(const FieldPtr &field) const;

  AlgebraicNumber operator-() const;
  AlgebraicNumber inverse() const;
  AlgebraicNumber pow(unsigned long n) const;

  friend AlgebraicNumber operator+(const AlgebraicNumber &a, const AlgebraicNumber &b);
  friend AlgebraicNumber operator-(const AlgebraicNumber &a, const AlgebraicNumber &b);
  friend AlgebraicNumber operator*(const AlgebraicNumber &a, const AlgebraicNumber &b);
  friend AlgebraicNumber operator/(const AlgebraicNumber &a, const AlgebraicNumber &b);
  friend bool operator==(const AlgebraicNumber &a, const AlgebraicNumber &b);

private:
  FieldPtr field_;
  std::vector<Rational> coords_;
};

/// The field both operands can be expressed in; throws FieldMismatch.
FieldPtr common_field(const AlgebraicNumber &a, const AlgebraicNumber &b);

/// Exact sign of the real value.
int sign_at(const AlgebraicNumber &a);

AlgebraicNumber field_arith(const AlgebraicNumber &a, const AlgebraicNumber &b,
                            ArithOp op);

/// Monic minimal polynomial over Q, found as the first linear dependency
/// among 1, a, a^2, ...
UniPoly minimal_polynomial(const AlgebraicNumber &a);
std::size_t degree_over_q(const AlgebraicNumber &a);

/// Q(c^(1/m)) and its generator. Perfect m-th powers come back in Q.
/// Throws UnsupportedDegree for composite m when c is not a perfect power.
std::pair<FieldPtr, AlgebraicNumber> nth_root_field(const Rational &c,
                                                    unsigned long m);

bool is_prime(unsigned long n);

/// "p/q" for rationals, otherwise "name:(c0,c1,...)" (name "K" if unnamed).
std::string to_string(const AlgebraicNumber &a);
std::string to_string(ArithOp op);

} // namespace bss
