#include "bss/stdlib/enumeration.hpp"

#include <numeric>

namespace bss {

namespace {

// Position of a positive reduced fraction p/(h-p) within height h.
std::size_t rank_in_height(unsigned long p, unsigned long h) {
  std::size_t r = 0;
  for (unsigned long i = 1; i < p; ++i)
    if (std::gcd(i, h - i) == 1)
      ++r;
  return r;
}

} // namespace

Rational rational_at(std::size_t index) {
  if (index == 0)
    return Rational(0);
  std::size_t k = (index - 1) / 2; // k-th positive value
  bool negative = (index - 1) % 2 == 1;
  for (unsigned long h = 2;; ++h)
    for (unsigned long p = 1; p < h; ++p)
      if (std::gcd(p, h - p) == 1 && k-- == 0) {
        Rational q(static_cast<long>(p), static_cast<long>(h - p));
        q.canonicalize();
        return negative ? Rational(-q) : q;
      }
}

std::size_t rational_index(const Rational &q) {
  if (q == 0)
    return 0;
  Rational a = abs(q);
  unsigned long p = a.get_num().get_ui(), d = a.get_den().get_ui();
  unsigned long h = p + d;
  std::size_t before = 0;
  for (unsigned long hh = 2; hh < h; ++hh)
    for (unsigned long i = 1; i < hh; ++i)
      if (std::gcd(i, hh - i) == 1)
        ++before;
  std::size_t k = before + rank_in_height(p, h);
  return 1 + 2 * k + (q < 0 ? 1 : 0);
}

void next_sequence(IndexSequence &s) {
  if (s.back() > 0) {
    --s.back();
    s.push_back(0);
    return;
  }
  std::size_t t = 0;
  while (!s.empty() && s.back() == 0) {
    s.pop_back();
    ++t;
  }
  if (s.empty()) {
    s.push_back(t);
    return;
  }
  --s.back();
  s.push_back(t);
}

IndexSequence sequence_at(std::size_t index) {
  IndexSequence s{0};
  for (std::size_t i = 0; i < index; ++i)
    next_sequence(s);
  return s;
}

UniPoly polynomial_of(const IndexSequence &s) {
  std::size_t k = s.size() - 1;
  std::vector<Rational> c(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    std::size_t deg = k - i;
    c[deg] = rational_at(i == 0 ? s[i] + 1 : s[i]);
  }
  return UniPoly(c);
}

UniPoly polynomial_at(std::size_t index) { return polynomial_of(sequence_at(index)); }

std::pair<unsigned, unsigned> monomial_at(std::size_t j) {
  unsigned e1 = 0, e2 = 0;
  for (std::size_t i = 0; i < j; ++i) {
    if (e1 > 0) {
      --e1;
      ++e2;
    } else {
      e1 = e2 + 1;
      e2 = 0;
    }
  }
  return {e1, e2};
}

MultiPoly bivariate_of(const IndexSequence &s) {
  std::size_t k = s.size() - 1;
  MultiPoly p(2);
  for (std::size_t i = 0; i < s.size(); ++i) {
    auto [e1, e2] = monomial_at(k - i);
    p.add_term({e1, e2}, AlgebraicNumber(rational_at(i == 0 ? s[i] + 1 : s[i])));
  }
  return p;
}

MultiPoly bivariate_at(std::size_t index) { return bivariate_of(sequence_at(index)); }

} // namespace bss
