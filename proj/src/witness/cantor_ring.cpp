#include "bss/witness/cantor_ring.hpp"

#include "bss/errors.hpp"

#include <map>
#include <vector>

namespace bss {

namespace {

struct Expansion {
  std::vector<int> digits;
  std::size_t period_start = 0; // digits[period_start..] repeat forever
};

Rational value_of(const std::vector<int> &d, std::size_t start) {
  Rational pre(0), scale(1);
  for (std::size_t k = 0; k < start; ++k) {
    scale /= 3;
    pre += d[k] * scale;
  }
  Rational block(0), bscale(1);
  for (std::size_t k = start; k < d.size(); ++k) {
    bscale /= 3;
    block += d[k] * bscale;
  }
  // 0.(B) = B * 3^L / (3^L - 1)
  Rational period_factor = 1 / (1 - bscale);
  return pre + scale * block * period_factor;
}

std::string digits_string(const Expansion &e, const std::vector<int> &d) {
  std::string s = "0.";
  bool zero_tail = true;
  for (std::size_t k = e.period_start; k < d.size(); ++k)
    zero_tail = zero_tail && d[k] == 0;
  for (std::size_t k = 0; k < e.period_start; ++k)
    s += static_cast<char>('0' + d[k]);
  if (!zero_tail) {
    s += '(';
    for (std::size_t k = e.period_start; k < d.size(); ++k)
      s += static_cast<char>('0' + d[k]);
    s += ')';
  }
  if (s == "0.")
    s += '0';
  return s;
}

} // namespace

CantorPair cantor_decompose(const Rational &x, std::size_t digit_budget) {
  if (x < 0 || x > 1)
    throw PreconditionError("cantor_decompose needs x in [0, 1], got " + to_string(x));
  Expansion e;
  if (x == 1) {
    e.digits = {2};
  } else {
    std::map<Rational, std::size_t> seen;
    Rational r = x;
    while (true) {
      auto [it, fresh] = seen.emplace(r, e.digits.size());
      if (!fresh) {
        e.period_start = it->second;
        break;
      }
      if (e.digits.size() >= digit_budget)
        throw Error("ternary expansion of " + to_string(x) + " exceeds " +
                    std::to_string(digit_budget) + " digits");
      r *= 3;
      Integer d = floor(r);
      r -= d;
      e.digits.push_back(static_cast<int>(d.get_si()));
    }
  }
  std::vector<int> d1, d2;
  for (int d : e.digits) {
    d1.push_back(d == 2 ? 2 : 0);
    d2.push_back(d == 1 ? 2 : 0);
  }
  CantorPair p;
  p.c1 = value_of(d1, e.period_start);
  p.c2 = value_of(d2, e.period_start);
  p.digits_used = e.digits.size();
  p.x_digits = digits_string(e, e.digits);
  p.c1_digits = digits_string(e, d1);
  p.c2_digits = digits_string(e, d2);
  return p;
}

nlohmann::json cantor_pair_to_json(const Rational &x, const CantorPair &p) {
  return {{"x", to_string(x)},           {"c1", to_string(p.c1)},
          {"c2", to_string(p.c2)},       {"digits_used", p.digits_used},
          {"x_digits", p.x_digits},      {"c1_digits", p.c1_digits},
          {"c2_digits", p.c2_digits},    {"exact", p.c1 + p.c2 / 2 == x}};
}

} // namespace bss
