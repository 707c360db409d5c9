#include "bss/exact/multipoly.hpp"

#include "bss/errors.hpp"

#include <numeric>
#include <sstream>

namespace bss {

bool GrlexLess::operator()(const Exponents &a, const Exponents &b) const {
  unsigned da = std::accumulate(a.begin(), a.end(), 0u);
  unsigned db = std::accumulate(b.begin(), b.end(), 0u);
  if (da != db)
    return da < db;
  return a < b;
}

MultiPoly MultiPoly::constant(std::size_t arity, const AlgebraicNumber &c) {
  MultiPoly p(arity);
  p.add_term(Exponents(arity, 0), c);
  return p;
}

MultiPoly MultiPoly::variable(std::size_t arity, std::size_t index) {
  if (index >= arity)
    throw PreconditionError("variable index out of range");
  MultiPoly p(arity);
  Exponents e(arity, 0);
  e[index] = 1;
  p.add_term(e, AlgebraicNumber(1));
  return p;
}

MultiPoly MultiPoly::from_unipoly(const UniPoly &u) {
  MultiPoly p(1);
  for (std::size_t i = 0; i < u.coeffs().size(); ++i)
    p.add_term({static_cast<unsigned>(i)}, AlgebraicNumber(u.coeffs()[i]));
  return p;
}

bool MultiPoly::is_constant() const {
  if (terms_.empty())
    return true;
  if (terms_.size() > 1)
    return false;
  for (unsigned e : terms_.begin()->first)
    if (e)
      return false;
  return true;
}

std::optional<AlgebraicNumber> MultiPoly::constant_value() const {
  if (!is_constant())
    return std::nullopt;
  if (terms_.empty())
    return AlgebraicNumber(0);
  return terms_.begin()->second;
}

unsigned MultiPoly::total_degree() const {
  unsigned d = 0;
  for (const auto &[e, c] : terms_)
    d = std::max(d, std::accumulate(e.begin(), e.end(), 0u));
  return d;
}

unsigned MultiPoly::degree_in(std::size_t var) const {
  unsigned d = 0;
  for (const auto &[e, c] : terms_)
    d = std::max(d, e[var]);
  return d;
}

void MultiPoly::add_term(const Exponents &e, const AlgebraicNumber &c) {
  if (e.size() != arity_)
    throw PreconditionError("exponent vector length does not match arity");
  if (c.is_zero())
    return;
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_.emplace(e, c);
    return;
  }
  it->second = it->second + c;
  if (it->second.is_zero())
    terms_.erase(it);
}

AlgebraicNumber MultiPoly::eval(const std::vector<AlgebraicNumber> &point) const {
  if (point.size() != arity_)
    throw PreconditionError("evaluation point has the wrong length");
  std::vector<std::vector<AlgebraicNumber>> powers(arity_);
  for (std::size_t v = 0; v < arity_; ++v) {
    unsigned d = degree_in(v);
    powers[v].reserve(d + 1);
    powers[v].push_back(AlgebraicNumber(1));
    for (unsigned k = 1; k <= d; ++k)
      powers[v].push_back(powers[v].back() * point[v]);
  }
  AlgebraicNumber sum(0);
  for (const auto &[e, c] : terms_) {
    AlgebraicNumber t = c;
    for (std::size_t v = 0; v < arity_; ++v)
      if (e[v])
        t = t * powers[v][e[v]];
    sum = sum + t;
  }
  return sum;
}

UniPoly MultiPoly::to_unipoly() const {
  if (arity_ != 1)
    throw PreconditionError("to_unipoly needs a univariate polynomial");
  std::vector<Rational> coeffs(degree_in(0) + 1);
  for (const auto &[e, c] : terms_) {
    auto q = c.as_rational();
    if (!q)
      throw PreconditionError("to_unipoly needs rational coefficients");
    coeffs[e[0]] = *q;
  }
  return UniPoly(std::move(coeffs));
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r = *this;
  for (auto &[e, c] : r.terms_)
    c = -c;
  return r;
}

MultiPoly operator+(const MultiPoly &a, const MultiPoly &b) {
  if (a.arity_ != b.arity_)
    throw PreconditionError("arity mismatch");
  MultiPoly r = a;
  for (const auto &[e, c] : b.terms_)
    r.add_term(e, c);
  return r;
}

MultiPoly operator-(const MultiPoly &a, const MultiPoly &b) { return a + (-b); }

MultiPoly operator*(const MultiPoly &a, const MultiPoly &b) {
  if (a.arity_ != b.arity_)
    throw PreconditionError("arity mismatch");
  MultiPoly r(a.arity_);
  Exponents e(a.arity_);
  for (const auto &[ea, ca] : a.terms_)
    for (const auto &[eb, cb] : b.terms_) {
      for (std::size_t v = 0; v < a.arity_; ++v)
        e[v] = ea[v] + eb[v];
      r.add_term(e, ca * cb);
    }
  return r;
}

MultiPoly operator*(const AlgebraicNumber &c, const MultiPoly &a) {
  MultiPoly r(a.arity_);
  if (c.is_zero())
    return r;
  for (const auto &[e, x] : a.terms_)
    r.terms_.emplace(e, c * x);
  return r;
}

bool operator==(const MultiPoly &a, const MultiPoly &b) {
  if (a.arity_ != b.arity_ || a.terms_.size() != b.terms_.size())
    return false;
  for (auto i = a.terms_.begin(), j = b.terms_.begin(); i != a.terms_.end(); ++i, ++j)
    if (i->first != j->first || !(i->second == j->second))
      return false;
  return true;
}

// ---------------------------------------------------------------------------
// Division and gcd

std::optional<MultiPoly> divide_exact(const MultiPoly &a, const MultiPoly &b) {
  if (b.is_zero())
    throw DivisionByZero();
  if (auto c = b.constant_value())
    return c->inverse() * a;
  MultiPoly rem = a, quo(a.arity());
  const auto &[lb_exp, lb_coef] = b.leading_term();
  AlgebraicNumber lb_inv = lb_coef.inverse();
  Exponents e(a.arity());
  while (!rem.is_zero()) {
    const auto &[lr_exp, lr_coef] = rem.leading_term();
    for (std::size_t v = 0; v < a.arity(); ++v) {
      if (lr_exp[v] < lb_exp[v])
        return std::nullopt;
      e[v] = lr_exp[v] - lb_exp[v];
    }
    MultiPoly t(a.arity());
    t.add_term(e, lr_coef * lb_inv);
    quo = quo + t;
    rem = rem - t * b;
  }
  return quo;
}

MultiPoly make_monic(const MultiPoly &p) {
  if (p.is_zero())
    return p;
  return p.leading_term().second.inverse() * p;
}

namespace {

// Largest variable index occurring in p, or -1 for constants.
int main_variable(const MultiPoly &p) {
  int v = -1;
  for (const auto &[e, c] : p.terms())
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i] && static_cast<int>(i) > v)
        v = static_cast<int>(i);
  return v;
}

// Coefficients of p viewed as a polynomial in Y_var.
std::vector<MultiPoly> coefficients_in(const MultiPoly &p, std::size_t var) {
  std::vector<MultiPoly> out(p.degree_in(var) + 1, MultiPoly(p.arity()));
  for (const auto &[e, c] : p.terms()) {
    Exponents f = e;
    f[var] = 0;
    out[e[var]].add_term(f, c);
  }
  return out;
}

MultiPoly shift_in(const MultiPoly &p, std::size_t var, unsigned k) {
  MultiPoly r(p.arity());
  for (const auto &[e, c] : p.terms()) {
    Exponents f = e;
    f[var] += k;
    r.add_term(f, c);
  }
  return r;
}

MultiPoly content_in(const MultiPoly &p, std::size_t var) {
  MultiPoly g(p.arity());
  for (const auto &c : coefficients_in(p, var)) {
    if (c.is_zero())
      continue;
    g = gcd(g, c);
    if (g.is_constant())
      break;
  }
  return g;
}

MultiPoly primitive_part_in(const MultiPoly &p, std::size_t var) {
  if (p.is_zero())
    return p;
  MultiPoly c = content_in(p, var);
  return *divide_exact(p, c);
}

// Pseudo-remainder of a by b in Y_var.
MultiPoly pseudo_remainder(MultiPoly a, const MultiPoly &b, std::size_t var) {
  unsigned db = b.degree_in(var);
  MultiPoly lb = coefficients_in(b, var).back();
  while (!a.is_zero() && a.degree_in(var) >= db) {
    unsigned da = a.degree_in(var);
    MultiPoly la = coefficients_in(a, var).back();
    a = lb * a - shift_in(la * b, var, da - db);
  }
  return a;
}

} // namespace

MultiPoly gcd(const MultiPoly &a, const MultiPoly &b) {
  if (a.arity() != b.arity())
    throw PreconditionError("arity mismatch");
  if (a.is_zero())
    return make_monic(b);
  if (b.is_zero())
    return make_monic(a);
  if (a.is_constant() || b.is_constant())
    return MultiPoly::constant(a.arity(), AlgebraicNumber(1));
  int va = main_variable(a), vb = main_variable(b);
  std::size_t v = static_cast<std::size_t>(std::max(va, vb));
  if (a.degree_in(v) == 0)
    return gcd(a, content_in(b, v));
  if (b.degree_in(v) == 0)
    return gcd(content_in(a, v), b);

  MultiPoly ca = content_in(a, v), cb = content_in(b, v);
  MultiPoly c = gcd(ca, cb);
  MultiPoly p = *divide_exact(a, ca), q = *divide_exact(b, cb);
  if (p.degree_in(v) < q.degree_in(v))
    std::swap(p, q);
  while (!q.is_zero()) {
    MultiPoly r = pseudo_remainder(p, q, v);
    p = std::move(q);
    if (!r.is_zero() && r.degree_in(v) == 0) {
      p = MultiPoly::constant(a.arity(), AlgebraicNumber(1));
      break;
    }
    q = primitive_part_in(r, v);
  }
  return make_monic(c * primitive_part_in(p, v));
}

// ---------------------------------------------------------------------------

RatInterval interval_eval(const MultiPoly &p, const std::vector<RatInterval> &box) {
  if (box.size() != p.arity())
    throw PreconditionError("box dimension does not match arity");
  const Rational coeff_width(1, Integer("1208925819614629174706176")); // 2^-80
  RatInterval sum{Rational(0)};
  for (const auto &[e, c] : p.terms()) {
    RatInterval t = c.enclosure(coeff_width);
    for (std::size_t v = 0; v < e.size(); ++v)
      if (e[v])
        t = t * box[v].pow(e[v]);
    sum = sum + t;
  }
  return sum;
}

std::string variable_name(std::size_t arity, std::size_t index) {
  if (arity == 1)
    return "Y";
  return "Y" + std::to_string(index + 1);
}

std::string to_string(const MultiPoly &p) {
  if (p.is_zero())
    return "0";
  std::ostringstream out;
  bool first = true;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const auto &[e, c] = *it;
    std::string mono;
    for (std::size_t v = 0; v < e.size(); ++v) {
      if (!e[v])
        continue;
      if (!mono.empty())
        mono += "*";
      mono += variable_name(p.arity(), v);
      if (e[v] > 1)
        mono += "^" + std::to_string(e[v]);
    }
    std::string coef;
    bool negative = false;
    if (auto q = c.as_rational()) {
      negative = sgn(*q) < 0;
      Rational mag = abs(*q);
      if (mag != 1 || mono.empty())
        coef = to_string(mag);
    } else {
      coef = "(" + to_string(c) + ")";
    }
    if (first)
      out << (negative ? "-" : "");
    else
      out << (negative ? " - " : " + ");
    first = false;
    out << coef;
    if (!coef.empty() && !mono.empty())
      out << '*';
    out << mono;
  }
  return out.str();
}

} // namespace bss
