#pragma once

#include "bss/exact/interval.hpp"
#include "bss/exact/number_field.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace bss {

using Exponents = std::vector<unsigned>;

/// Graded lexicographic order: total degree first, then lexicographic with
/// the first variable most significant.
struct GrlexLess {
  bool operator()(const Exponents &a, const Exponents &b) const;
};

/// Sparse polynomial in Y1..Yk with coefficients in a real number field.
/// No zero coefficient is ever stored.
class MultiPoly {
public:
  using Terms = std::map<Exponents, AlgebraicNumber, GrlexLess>;

  explicit MultiPoly(std::size_t arity = 0) : arity_(arity) {}
  static MultiPoly constant(std::size_t arity, const AlgebraicNumber &c);
  /// The indeterminate Y_{index+1}.
  static MultiPoly variable(std::size_t arity, std::size_t index);
  static MultiPoly from_unipoly(const UniPoly &p);

  std::size_t arity() const { return arity_; }
  const Terms &terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// The value of a constant polynomial (0 for the zero polynomial).
  std::optional<AlgebraicNumber> constant_value() const;
  unsigned total_degree() const;
  unsigned degree_in(std::size_t var) const;
  /// Greatest term under GrlexLess; requires a nonzero polynomial.
  const Terms::value_type &leading_term() const { return *terms_.rbegin(); }

  /// Adds c * Y^e, dropping the term if the sum cancels.
  void add_term(const Exponents &e, const AlgebraicNumber &c);

  AlgebraicNumber eval(const std::vector<AlgebraicNumber> &point) const;
  /// Univariate view; requires arity 1 and rational coefficients.
  UniPoly to_unipoly() const;

  MultiPoly operator-() const;
  friend MultiPoly operator+(const MultiPoly &a, const MultiPoly &b);
  friend MultiPoly operator-(const MultiPoly &a, const MultiPoly &b);
  friend MultiPoly operator*(const MultiPoly &a, const MultiPoly &b);
  friend MultiPoly operator*(const AlgebraicNumber &c, const MultiPoly &a);
  friend bool operator==(const MultiPoly &a, const MultiPoly &b);

private:
  std::size_t arity_;
  Terms terms_;
};

/// Exact quotient a / b when b divides a, otherwise nullopt.
std::optional<MultiPoly> divide_exact(const MultiPoly &a, const MultiPoly &b);

/// Greatest common divisor, scaled so its leading coefficient is 1.
/// Recursive primitive polynomial remainder sequences, one variable at a time.
MultiPoly gcd(const MultiPoly &a, const MultiPoly &b);

/// Scales p so that its leading coefficient is 1.
MultiPoly make_monic(const MultiPoly &p);

/// Naive interval extension: term-by-term enclosure over the box, with
/// algebraic coefficients enclosed by refined rational intervals.
RatInterval interval_eval(const MultiPoly &p, const std::vector<RatInterval> &box);

/// Indeterminate names: "Y" for arity 1, "Y1".."Yk" otherwise.
std::string variable_name(std::size_t arity, std::size_t index);
std::string to_string(const MultiPoly &p);

} // namespace bss
