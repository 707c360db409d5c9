#include "bss/exact/rational.hpp"

#include "bss/errors.hpp"

#include <cctype>

namespace bss {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty())
    return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c)))
      return false;
  return true;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
    s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
    s.remove_suffix(1);
  return s;
}

} // namespace

Rational parse_rational(std::string_view text) {
  std::string_view s = trim(text);
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  std::string_view num = s, den;
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    num = trim(s.substr(0, slash));
    den = trim(s.substr(slash + 1));
    if (!all_digits(den))
      throw ParseError("bad rational literal '" + std::string(text) + "'");
  }
  if (!all_digits(num))
    throw ParseError("bad rational literal '" + std::string(text) + "'");
  Rational q;
  q.get_num() = Integer(std::string(num));
  q.get_den() = den.empty() ? Integer(1) : Integer(std::string(den));
  if (q.get_den() == 0)
    throw ParseError("zero denominator in '" + std::string(text) + "'");
  q.canonicalize();
  if (negative)
    q = -q;
  return q;
}

std::string to_string(const Rational &q) { return q.get_str(); }
std::string to_string(const Integer &z) { return z.get_str(); }

Integer floor(const Rational &q) {
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

namespace {

std::optional<Integer> exact_root(const Integer &z, unsigned long m) {
  if (z < 0) {
    if (m % 2 == 0)
      return std::nullopt;
    auto r = exact_root(Integer(-z), m);
    if (!r)
      return std::nullopt;
    return Integer(-*r);
  }
  Integer r;
  if (mpz_root(r.get_mpz_t(), z.get_mpz_t(), m) == 0)
    return std::nullopt;
  return r;
}

} // namespace

std::optional<Rational> exact_root(const Rational &q, unsigned long m) {
  if (m == 0)
    return std::nullopt;
  auto n = exact_root(q.get_num(), m);
  auto d = exact_root(q.get_den(), m);
  if (!n || !d)
    return std::nullopt;
  Rational r(*n, *d);
  r.canonicalize();
  return r;
}

Rational pow(const Rational &base, unsigned long exp) {
  Rational r;
  mpz_pow_ui(r.get_num_mpz_t(), base.get_num_mpz_t(), exp);
  mpz_pow_ui(r.get_den_mpz_t(), base.get_den_mpz_t(), exp);
  return r;
}

Rational round_dyadic(const Rational &q, unsigned long bits) {
  Integer scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 2, bits);
  Rational scaled = q * scale;
  Rational half(1, 2);
  Integer n = sgn(scaled) >= 0 ? floor(Rational(scaled + half))
                               : Integer(-floor(Rational(-scaled + half)));
  Rational r(n, scale);
  r.canonicalize();
  return r;
}

} // namespace bss
