#pragma once

#include "bss/exact/rational.hpp"

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace bss {

/// Dense univariate polynomial over Q, coefficients lowest degree first.
/// The zero polynomial has no coefficients; otherwise the leading
/// coefficient is nonzero.
class UniPoly {
public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Rational> coeffs);

  static UniPoly constant(const Rational &c);
  static UniPoly monomial(const Rational &c, std::size_t degree);
  static UniPoly x() { return monomial(Rational(1), 1); }

  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Rational> &coeffs() const { return coeffs_; }
  Rational coeff(std::size_t i) const {
    return i < coeffs_.size() ? coeffs_[i] : Rational(0);
  }
  const Rational &leading() const { return coeffs_.back(); }

  Rational eval(const Rational &x) const;
  UniPoly derivative() const;
  UniPoly monic() const;
  UniPoly operator-() const;

  friend UniPoly operator+(const UniPoly &a, const UniPoly &b);
  friend UniPoly operator-(const UniPoly &a, const UniPoly &b);
  friend UniPoly operator*(const UniPoly &a, const UniPoly &b);
  friend UniPoly operator*(const Rational &c, const UniPoly &a);
  friend bool operator==(const UniPoly &a, const UniPoly &b) {
    return a.coeffs_ == b.coeffs_;
  }

private:
  void normalize();
  std::vector<Rational> coeffs_;
};

/// Euclidean division: a = q*b + r with deg r < deg b.
std::pair<UniPoly, UniPoly> divmod(const UniPoly &a, const UniPoly &b);
UniPoly operator%(const UniPoly &a, const UniPoly &b);

/// Monic gcd; gcd(0, 0) = 0.
UniPoly gcd(const UniPoly &a, const UniPoly &b);

/// p / gcd(p, p'), monic.
UniPoly squarefree_part(const UniPoly &p);

/// Dense ascending form "c0 + c1*X + c2*X^2"; the zero polynomial prints "0".
std::string to_string(const UniPoly &p, std::string_view var = "X");

/// Accepts the dense form above as well as sparse input such as "X^2 - 2"
/// or "2*X^5 + 1/3". Any single identifier is accepted as the variable.
UniPoly parse_unipoly(std::string_view text);

} // namespace bss
