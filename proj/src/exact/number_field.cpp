#include "bss/exact/number_field.hpp"

#include "bss/errors.hpp"

#include <sstream>

namespace bss {

namespace {

// Rational roots of an integer-scaled polynomial, for small coefficients.
bool has_rational_root(const UniPoly &p) {
  Integer lcm = 1;
  for (const auto &c : p.coeffs())
    mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.get_den_mpz_t());
  std::vector<Integer> a;
  for (const auto &c : p.coeffs())
    a.push_back(Integer(c * lcm));
  if (a.front() == 0)
    return true;
  auto divisors = [](Integer n) -> std::optional<std::vector<Integer>> {
    n = abs(n);
    if (n > Integer("1000000000000"))
      return std::nullopt;
    std::vector<Integer> out;
    for (Integer d = 1; d * d <= n; ++d) {
      if (n % d == 0) {
        out.push_back(d);
        if (d * d != n)
          out.push_back(Integer(n / d));
      }
    }
    return out;
  };
  auto num = divisors(a.front()), den = divisors(a.back());
  if (!num || !den)
    return false; // too large to test; trusted
  for (const auto &n : *num)
    for (const auto &d : *den)
      for (int s : {1, -1}) {
        Rational r(Integer(s * n), d);
        r.canonicalize();
        if (p.eval(r) == 0)
          return true;
      }
  return false;
}

} // namespace

NumberField::NumberField(UniPoly min_poly, RatInterval interval, std::string name)
    : min_poly_(std::move(min_poly)), interval_(std::move(interval)),
      name_(std::move(name)), sturm_(min_poly_), best_(interval_) {}

FieldPtr NumberField::create(const UniPoly &min_poly, const RatInterval &isolating,
                             std::string name) {
  if (min_poly.degree() < 1)
    throw PreconditionError("minimal polynomial must have positive degree");
  UniPoly monic = min_poly.monic();
  if (gcd(monic, monic.derivative()).degree() > 0)
    throw PreconditionError("minimal polynomial has a repeated factor");
  if (monic.degree() == 1) {
    Rational root = -monic.coeff(0);
    if (!isolating.contains(root))
      throw PreconditionError("isolating interval misses the root");
    return FieldPtr(new NumberField(monic, isolating, std::move(name)));
  }
  if (monic.degree() <= 3 && has_rational_root(monic))
    throw PreconditionError("minimal polynomial has a rational root");
  if (monic.eval(isolating.lo()) == 0 || monic.eval(isolating.hi()) == 0)
    throw PreconditionError("isolating interval endpoint is a root");
  SturmSequence sturm(monic);
  if (isolating.width() == 0 ||
      sturm.count_roots(isolating.lo(), isolating.hi()) != 1)
    throw PreconditionError("interval does not isolate exactly one root");
  return FieldPtr(new NumberField(monic, isolating, std::move(name)));
}

const FieldPtr &NumberField::rationals() {
  static const FieldPtr q = create(UniPoly::x(), RatInterval(Rational(-1), Rational(1)), "Q");
  return q;
}

RatInterval NumberField::root_enclosure(const Rational &max_width) const {
  if (degree() == 1)
    return RatInterval(Rational(-min_poly_.coeff(0)));
  std::lock_guard<std::mutex> lock(cache_mutex_);
  if (best_.width() > max_width)
    best_ = refine_root(sturm_, best_, max_width);
  return best_;
}

bool NumberField::same_as(const NumberField &other) const {
  if (this == &other)
    return true;
  if (!(min_poly_ == other.min_poly_))
    return false;
  if (degree() == 1)
    return true;
  Rational lo = std::max(interval_.lo(), other.interval_.lo());
  Rational hi = std::min(interval_.hi(), other.interval_.hi());
  if (hi <= lo)
    return false;
  if (min_poly_.eval(lo) == 0 || min_poly_.eval(hi) == 0)
    return false;
  return sturm_.count_roots(lo, hi) == 1;
}

// ---------------------------------------------------------------------------

AlgebraicNumber::AlgebraicNumber() : AlgebraicNumber(Rational(0)) {}

AlgebraicNumber::AlgebraicNumber(const Rational &q)
    : field_(NumberField::rationals()), coords_{q} {}

AlgebraicNumber::AlgebraicNumber(FieldPtr field, std::vector<Rational> coords)
    : field_(std::move(field)), coords_(std::move(coords)) {
  if (coords_.size() > field_->degree())
    throw PreconditionError("too many coordinates for the field degree");
  coords_.resize(field_->degree());
}

AlgebraicNumber AlgebraicNumber::generator(const FieldPtr &field) {
  if (field->degree() == 1)
    return AlgebraicNumber(field, {Rational(-field->min_poly().coeff(0))});
  std::vector<Rational> c(field->degree());
  c[1] = 1;
  return AlgebraicNumber(field, std::move(c));
}

bool AlgebraicNumber::is_zero() const {
  for (const auto &c : coords_)
    if (c != 0)
      return false;
  return true;
}

std::optional<Rational> AlgebraicNumber::as_rational() const {
  for (std::size_t i = 1; i < coords_.size(); ++i)
    if (coords_[i] != 0)
      return std::nullopt;
  return coords_[0];
}

namespace {

RatInterval eval_interval(const std::vector<Rational> &coords, const RatInterval &x) {
  RatInterval acc{Rational(0)};
  for (auto it = coords.rbegin(); it != coords.rend(); ++it)
    acc = acc * x + RatInterval(*it);
  return acc;
}

} // namespace

RatInterval AlgebraicNumber::enclosure(const Rational &max_width) const {
  if (auto q = as_rational())
    return RatInterval(*q);
  Rational w = 1;
  while (true) {
    RatInterval r = eval_interval(coords_, field_->root_enclosure(w));
    if (r.width() <= max_width)
      return r;
    w /= 256;
  }
}

int sign_at(const AlgebraicNumber &a) {
  if (auto q = a.as_rational())
    return sgn(*q);
  Rational w = a.field()->isolating_interval().width();
  while (true) {
    RatInterval r = eval_interval(a.coords(), a.field()->root_enclosure(w));
    if (int s = r.certain_sign())
      return s;
    w /= 16;
  }
}

FieldPtr common_field(const AlgebraicNumber &a, const AlgebraicNumber &b) {
  if (a.field() == b.field())
    return a.field();
  if (b.is_rational())
    return a.field();
  if (a.is_rational())
    return b.field();
  if (a.field()->same_as(*b.field()))
    return a.field();
  throw FieldMismatch();
}

AlgebraicNumber AlgebraicNumber::lift_to(const FieldPtr &field) const {
  if (field == field_ || field_->same_as(*field))
    return AlgebraicNumber(field, coords_);
  if (auto q = as_rational())
    return AlgebraicNumber(field, {*q});
  throw FieldMismatch();
}

AlgebraicNumber AlgebraicNumber::operator-() const {
  AlgebraicNumber r = *this;
  for (auto &c : r.coords_)
    c = -c;
  return r;
}

AlgebraicNumber operator+(const AlgebraicNumber &a, const AlgebraicNumber &b) {
  FieldPtr f = common_field(a, b);
  AlgebraicNumber x = a.lift_to(f), y = b.lift_to(f);
  for (std::size_t i = 0; i < x.coords_.size(); ++i)
    x.coords_[i] += y.coords_[i];
  return x;
}

AlgebraicNumber operator-(const AlgebraicNumber &a, const AlgebraicNumber &b) {
  return a + (-b);
}

AlgebraicNumber operator*(const AlgebraicNumber &a, const AlgebraicNumber &b) {
  FieldPtr f = common_field(a, b);
  if (f->degree() == 1)
    return AlgebraicNumber(f, {a.coords_[0] * b.coords_[0]});
  if (auto q = b.as_rational()) {
    AlgebraicNumber x = a.lift_to(f);
    for (auto &c : x.coords_)
      c *= *q;
    return x;
  }
  if (auto q = a.as_rational())
    return b * a;
  UniPoly p = UniPoly(a.lift_to(f).coords_) * UniPoly(b.lift_to(f).coords_);
  return AlgebraicNumber(f, (p % f->min_poly()).coeffs());
}

AlgebraicNumber AlgebraicNumber::inverse() const {
  if (is_zero())
    throw DivisionByZero();
  if (auto q = as_rational())
    return AlgebraicNumber(field_, {Rational(1 / *q)});
  // Extended Euclid: s*a + t*m = 1 since m is irreducible and a != 0 mod m.
  UniPoly r0 = field_->min_poly(), r1 = UniPoly(coords_);
  UniPoly s0, s1 = UniPoly::constant(Rational(1));
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    UniPoly s = s0 - q * s1;
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  if (r0.degree() != 0)
    throw Error("inverse: minimal polynomial is not irreducible");
  UniPoly inv = (1 / r0.leading()) * s0;
  return AlgebraicNumber(field_, (inv % field_->min_poly()).coeffs());
}

AlgebraicNumber operator/(const AlgebraicNumber &a, const AlgebraicNumber &b) {
  if (b.is_zero())
    throw DivisionByZero();
  common_field(a, b);
  return a * b.inverse();
}

AlgebraicNumber AlgebraicNumber::pow(unsigned long n) const {
  AlgebraicNumber result(field_, {Rational(1)}), base = *this;
  while (n) {
    if (n & 1)
      result = result * base;
    n >>= 1;
    if (n)
      base = base * base;
  }
  return result;
}

bool operator==(const AlgebraicNumber &a, const AlgebraicNumber &b) {
  if (a.field() == b.field())
    return a.coords_ == b.coords_;
  try {
    return (a - b).is_zero();
  } catch (const FieldMismatch &) {
    return false;
  }
}

AlgebraicNumber field_arith(const AlgebraicNumber &a, const AlgebraicNumber &b,
                            ArithOp op) {
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

UniPoly minimal_polynomial(const AlgebraicNumber &a) {
  const std::size_t n = a.field()->degree();
  if (auto q = a.as_rational())
    return UniPoly({Rational(-*q), Rational(1)});
  // Echelon rows over Q: coordinate part (length n) and the combination of
  // powers of a it came from.
  struct Row {
    std::vector<Rational> vec, combo;
    std::size_t pivot;
  };
  std::vector<Row> rows;
  AlgebraicNumber power(a.field(), {Rational(1)});
  for (std::size_t d = 0; d <= n; ++d) {
    std::vector<Rational> vec = power.coords();
    std::vector<Rational> combo(n + 1);
    combo[d] = 1;
    for (const auto &row : rows) {
      if (vec[row.pivot] == 0)
        continue;
      Rational f = vec[row.pivot] / row.vec[row.pivot];
      for (std::size_t i = 0; i < n; ++i)
        vec[i] -= f * row.vec[i];
      for (std::size_t i = 0; i <= n; ++i)
        combo[i] -= f * row.combo[i];
    }
    std::size_t pivot = n;
    for (std::size_t i = 0; i < n; ++i)
      if (vec[i] != 0) {
        pivot = i;
        break;
      }
    if (pivot == n) {
      combo.resize(d + 1);
      return UniPoly(std::move(combo)).monic();
    }
    rows.push_back({std::move(vec), std::move(combo), pivot});
    power = power * a;
  }
  throw Error("minimal_polynomial: no dependency found");
}

std::size_t degree_over_q(const AlgebraicNumber &a) {
  return static_cast<std::size_t>(minimal_polynomial(a).degree());
}

bool is_prime(unsigned long n) {
  if (n < 2)
    return false;
  for (unsigned long d = 2; d * d <= n; ++d)
    if (n % d == 0)
      return false;
  return true;
}

std::pair<FieldPtr, AlgebraicNumber> nth_root_field(const Rational &c,
                                                    unsigned long m) {
  if (sgn(c) <= 0)
    throw PreconditionError("nth_root_field requires c > 0");
  if (m == 0)
    throw PreconditionError("nth_root_field requires m >= 1");
  if (auto r = exact_root(c, m))
    return {NumberField::rationals(), AlgebraicNumber(*r)};
  if (!is_prime(m))
    throw UnsupportedDegree("Y^" + std::to_string(m) + " - " + to_string(c) +
                            ": composite degree without a perfect power");
  UniPoly p = UniPoly::monomial(Rational(1), m) - UniPoly::constant(c);
  Rational hi = c > 1 ? c : Rational(1);
  std::string name = "root" + std::to_string(m) + "(" + to_string(c) + ")";
  FieldPtr f = NumberField::create(p, RatInterval(Rational(0), hi), name);
  return {f, AlgebraicNumber::generator(f)};
}

std::string to_string(const AlgebraicNumber &a) {
  if (auto q = a.as_rational())
    return to_string(*q);
  std::ostringstream out;
  out << (a.field()->name().empty() ? "K" : a.field()->name()) << ":(";
  for (std::size_t i = 0; i < a.coords().size(); ++i)
    out << (i ? "," : "") << to_string(a.coords()[i]);
  out << ')';
  return out.str();
}

std::string to_string(ArithOp op) {
  switch (op) {
  case ArithOp::Add:
    return "ADD";
  case ArithOp::Sub:
    return "SUB";
  case ArithOp::Mul:
    return "MUL";
  case ArithOp::Div:
    return "DIV";
  }
  return "?";
}

} // namespace bss
