#include "bss/exact/unipoly.hpp"

#include "bss/errors.hpp"

#include <cctype>
#include <sstream>

namespace bss {

UniPoly::UniPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  normalize();
}

void UniPoly::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0)
    coeffs_.pop_back();
}

UniPoly UniPoly::constant(const Rational &c) { return UniPoly({c}); }

UniPoly UniPoly::monomial(const Rational &c, std::size_t degree) {
  std::vector<Rational> v(degree + 1);
  v[degree] = c;
  return UniPoly(std::move(v));
}

Rational UniPoly::eval(const Rational &x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
    acc = acc * x + *it;
  return acc;
}

UniPoly UniPoly::derivative() const {
  if (coeffs_.size() <= 1)
    return {};
  std::vector<Rational> v(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    v[i - 1] = coeffs_[i] * static_cast<long>(i);
  return UniPoly(std::move(v));
}

UniPoly UniPoly::monic() const {
  if (is_zero())
    return {};
  Rational inv = 1 / leading();
  return inv * *this;
}

UniPoly UniPoly::operator-() const {
  UniPoly r = *this;
  for (auto &c : r.coeffs_)
    c = -c;
  return r;
}

UniPoly operator+(const UniPoly &a, const UniPoly &b) {
  std::vector<Rational> v(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < v.size(); ++i)
    v[i] = a.coeff(i) + b.coeff(i);
  return UniPoly(std::move(v));
}

UniPoly operator-(const UniPoly &a, const UniPoly &b) { return a + (-b); }

UniPoly operator*(const UniPoly &a, const UniPoly &b) {
  if (a.is_zero() || b.is_zero())
    return {};
  std::vector<Rational> v(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0)
      continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
      v[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return UniPoly(std::move(v));
}

UniPoly operator*(const Rational &c, const UniPoly &a) {
  if (c == 0)
    return {};
  UniPoly r = a;
  for (auto &x : r.coeffs_)
    x *= c;
  return r;
}

std::pair<UniPoly, UniPoly> divmod(const UniPoly &a, const UniPoly &b) {
  if (b.is_zero())
    throw DivisionByZero();
  if (a.degree() < b.degree())
    return {UniPoly(), a};
  std::vector<Rational> rem = a.coeffs();
  std::vector<Rational> quo(a.coeffs().size() - b.coeffs().size() + 1);
  const Rational &lead = b.leading();
  const std::size_t db = b.coeffs().size() - 1;
  for (std::size_t k = quo.size(); k-- > 0;) {
    Rational q = rem[k + db] / lead;
    quo[k] = q;
    if (q == 0)
      continue;
    for (std::size_t j = 0; j <= db; ++j)
      rem[k + j] -= q * b.coeffs()[j];
  }
  rem.resize(db);
  return {UniPoly(std::move(quo)), UniPoly(std::move(rem))};
}

UniPoly operator%(const UniPoly &a, const UniPoly &b) {
  return divmod(a, b).second;
}

UniPoly gcd(const UniPoly &a, const UniPoly &b) {
  UniPoly x = a, y = b;
  while (!y.is_zero()) {
    UniPoly r = x % y;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

UniPoly squarefree_part(const UniPoly &p) {
  if (p.degree() <= 0)
    return p.monic();
  UniPoly g = gcd(p, p.derivative());
  return divmod(p, g).first.monic();
}

std::string to_string(const UniPoly &p, std::string_view var) {
  if (p.is_zero())
    return "0";
  std::ostringstream out;
  for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
    if (i)
      out << " + ";
    out << to_string(p.coeffs()[i]);
    if (i >= 1)
      out << '*' << var;
    if (i >= 2)
      out << '^' << i;
  }
  return out.str();
}

UniPoly parse_unipoly(std::string_view text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c)))
      s.push_back(c);
  if (s.empty())
    throw ParseError("empty polynomial");

  std::size_t pos = 0;
  auto fail = [&](const std::string &why) -> ParseError {
    return ParseError("bad polynomial '" + std::string(text) + "': " + why);
  };
  auto read_digits = [&]() {
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
      ++pos;
    return s.substr(start, pos - start);
  };

  std::vector<Rational> coeffs;
  std::string var;
  bool first = true;
  while (pos < s.size()) {
    bool negative = false, saw_sign = false;
    while (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
      negative ^= s[pos] == '-';
      saw_sign = true;
      ++pos;
    }
    if (!first && !saw_sign)
      throw fail("expected '+' or '-'");
    first = false;

    Rational c = 1;
    bool has_coeff = false;
    std::string digits = read_digits();
    if (!digits.empty()) {
      std::string lit = digits;
      if (pos < s.size() && s[pos] == '/') {
        ++pos;
        std::string den = read_digits();
        if (den.empty())
          throw fail("missing denominator");
        lit += "/" + den;
      }
      c = parse_rational(lit);
      has_coeff = true;
      if (pos < s.size() && s[pos] == '*') // 2X is accepted as an implicit product
        ++pos;
    }
    std::size_t deg = 0;
    if (pos < s.size() && std::isalpha(static_cast<unsigned char>(s[pos]))) {
      std::size_t start = pos;
      while (pos < s.size() && (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
        ++pos;
      std::string name = s.substr(start, pos - start);
      if (var.empty())
        var = name;
      else if (var != name)
        throw fail("more than one variable");
      deg = 1;
      if (pos < s.size() && s[pos] == '^') {
        ++pos;
        std::string e = read_digits();
        if (e.empty())
          throw fail("missing exponent");
        deg = std::stoul(e);
      }
    } else if (!has_coeff) {
      throw fail("expected a term");
    }
    if (coeffs.size() <= deg)
      coeffs.resize(deg + 1);
    coeffs[deg] += negative ? Rational(-c) : c;
  }
  return UniPoly(std::move(coeffs));
}

} // namespace bss
