#include "doctest.h"

#include "bss/errors.hpp"
#include "bss/exact/number_field.hpp"
#include "bss/exact/rational_function.hpp"
#include "bss/exact/sturm.hpp"

#include <mpfr.h>

#include <random>

using namespace bss;

namespace {

Rational q(const char *s) { return parse_rational(s); }

FieldPtr sqrt2_field() {
  static FieldPtr f = NumberField::create(parse_unipoly("X^2 - 2"),
                                          RatInterval(Rational(1), Rational(2)), "sqrt2");
  return f;
}

FieldPtr fifth_root2_field() { return nth_root_field(Rational(2), 5).first; }

Rational random_rational(std::mt19937_64 &rng, long range = 20, long den = 12) {
  std::uniform_int_distribution<long> n(-range, range), d(1, den);
  Rational r(n(rng), d(rng));
  r.canonicalize();
  return r;
}

AlgebraicNumber random_element(std::mt19937_64 &rng, const FieldPtr &f) {
  std::vector<Rational> c;
  for (std::size_t i = 0; i < f->degree(); ++i)
    c.push_back(random_rational(rng));
  return AlgebraicNumber(f, c);
}

// Independent sign oracle: locate alpha by MPFR bisection at 400 bits
// (about 120 decimal digits) and evaluate the element in floating point.
int mpfr_sign(const AlgebraicNumber &a) {
  const mpfr_prec_t prec = 400;
  const auto &f = *a.field();
  mpfr_t lo, hi, mid, val, acc, t;
  for (auto *x : {&lo, &hi, &mid, &val, &acc, &t})
    mpfr_init2(*x, prec);
  mpfr_set_q(lo, f.isolating_interval().lo().get_mpq_t(), MPFR_RNDN);
  mpfr_set_q(hi, f.isolating_interval().hi().get_mpq_t(), MPFR_RNDN);
  auto eval_min_poly = [&](mpfr_t x, mpfr_t out) {
    mpfr_set_ui(out, 0, MPFR_RNDN);
    const auto &c = f.min_poly().coeffs();
    for (auto it = c.rbegin(); it != c.rend(); ++it) {
      mpfr_mul(out, out, x, MPFR_RNDN);
      mpfr_set_q(t, it->get_mpq_t(), MPFR_RNDN);
      mpfr_add(out, out, t, MPFR_RNDN);
    }
  };
  eval_min_poly(lo, val);
  int slo = mpfr_sgn(val);
  for (int i = 0; i < 390; ++i) {
    mpfr_add(mid, lo, hi, MPFR_RNDN);
    mpfr_div_ui(mid, mid, 2, MPFR_RNDN);
    eval_min_poly(mid, val);
    if (mpfr_sgn(val) == slo)
      mpfr_set(lo, mid, MPFR_RNDN);
    else
      mpfr_set(hi, mid, MPFR_RNDN);
  }
  mpfr_set_ui(acc, 0, MPFR_RNDN);
  for (auto it = a.coords().rbegin(); it != a.coords().rend(); ++it) {
    mpfr_mul(acc, acc, lo, MPFR_RNDN);
    mpfr_set_q(t, it->get_mpq_t(), MPFR_RNDN);
    mpfr_add(acc, acc, t, MPFR_RNDN);
  }
  int s = mpfr_sgn(acc);
  for (auto *x : {&lo, &hi, &mid, &val, &acc, &t})
    mpfr_clear(*x);
  return s;
}

} // namespace

TEST_CASE("rational literals parse and print canonically") {
  CHECK(to_string(q("6/8")) == "3/4");
  CHECK(to_string(q("-4/2")) == "-2");
  CHECK(q("0") == 0);
  CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
  CHECK_THROWS_AS(parse_rational("abc"), ParseError);
  CHECK(*exact_root(q("8/27"), 3) == q("2/3"));
  CHECK_FALSE(exact_root(Rational(2), 2).has_value());
}

TEST_CASE("univariate polynomials print densely and reparse") {
  UniPoly p = parse_unipoly("X^2 - 2");
  CHECK(to_string(p) == "-2 + 0*X + 1*X^2");
  CHECK(parse_unipoly(to_string(p)) == p);
  CHECK(parse_unipoly("1 + -3*X") == UniPoly({Rational(1), Rational(-3)}));
  auto [quo, rem] = divmod(parse_unipoly("X^3 - 1"), parse_unipoly("X - 1"));
  CHECK(quo == parse_unipoly("X^2 + X + 1"));
  CHECK(rem.is_zero());
  CHECK(gcd(parse_unipoly("X^2 - 1"), parse_unipoly("X^2 + 2X + 1")) ==
        parse_unipoly("X + 1"));
}

TEST_CASE("sturm_isolate") {
  SUBCASE("no real roots") { CHECK(sturm_isolate(parse_unipoly("X^2 + 1")).empty()); }
  SUBCASE("single root at zero") {
    auto r = sturm_isolate(UniPoly::x());
    REQUIRE(r.size() == 1);
    CHECK(r[0].contains(Rational(0)));
    CHECK(r[0].lo() != 0);
    CHECK(r[0].hi() != 0);
  }
  SUBCASE("X^2 - 2 against hand-computed Sturm counts") {
    UniPoly p = parse_unipoly("X^2 - 2");
    SturmSequence s(p);
    // Chain X^2-2, 2X, 2: signs at -2 (+,-,+), at 0 (-,0,+), at 2 (+,+,+).
    CHECK(s.sign_changes(Rational(-2)) == 2);
    CHECK(s.sign_changes(Rational(0)) == 1);
    CHECK(s.sign_changes(Rational(2)) == 0);
    auto r = sturm_isolate(p);
    REQUIRE(r.size() == 2);
    CHECK(r[0].hi() <= 0);
    CHECK(r[1].lo() >= 0);
    RatInterval fine = refine_root(s, r[1], Rational(1, 10000));
    CHECK(fine.width() < Rational(1, 10000));
    CHECK(RatInterval(q("1414/1000"), q("1415/1000")).contains(fine));
  }
  SUBCASE("zero polynomial rejected") {
    CHECK_THROWS_AS(sturm_isolate(UniPoly()), PreconditionError);
  }
  SUBCASE("every returned interval has Sturm count one") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 60; ++trial) {
      std::uniform_int_distribution<int> deg(1, 6);
      // Products of linear factors guarantee real roots, some repeated.
      UniPoly p = UniPoly::constant(random_rational(rng) + Rational(21));
      int d = deg(rng);
      for (int i = 0; i < d; ++i)
        p = p * UniPoly({random_rational(rng, 5, 3), Rational(1)});
      p = p + UniPoly::constant(Rational(trial % 3 == 0 ? 1 : 0, 7));
      SturmSequence s(p);
      auto isolated = sturm_isolate(p);
      for (const auto &iv : isolated) {
        CHECK(s.count_roots(iv.lo(), iv.hi()) == 1);
        CHECK(p.eval(iv.lo()) != 0);
        CHECK(p.eval(iv.hi()) != 0);
      }
      Rational b = root_bound(p);
      CHECK(static_cast<int>(isolated.size()) == s.count_roots(-b, b));
    }
  }
}

TEST_CASE("sign_at") {
  auto f = sqrt2_field();
  auto alpha = AlgebraicNumber::generator(f);
  CHECK(sign_at(AlgebraicNumber(f, {Rational(0), Rational(0)})) == 0);
  CHECK(sign_at(alpha - q("7/5")) == 1);
  CHECK(sign_at(alpha * alpha - AlgebraicNumber(2)) == 0);
  CHECK(sign_at(alpha - q("3/2")) == -1);
  CHECK(sign_at(AlgebraicNumber(q("-1/3"))) == -1);
}

TEST_CASE("sign_at agrees with a 120-digit MPFR evaluation") {
  std::mt19937_64 rng(2024);
  for (const auto &f : {sqrt2_field(), fifth_root2_field()}) {
    for (int i = 0; i < 200; ++i) {
      AlgebraicNumber a = random_element(rng, f);
      CHECK(sign_at(a) == mpfr_sign(a));
    }
  }
}

TEST_CASE("field_arith") {
  auto f = sqrt2_field();
  auto alpha = AlgebraicNumber::generator(f);
  CHECK(field_arith(alpha, alpha, ArithOp::Mul) == AlgebraicNumber(2));
  CHECK(field_arith(AlgebraicNumber(q("2/3")), AlgebraicNumber(q("1/6")), ArithOp::Add) ==
        AlgebraicNumber(q("5/6")));
  auto inv = field_arith(AlgebraicNumber(1), AlgebraicNumber(1) + alpha, ArithOp::Div);
  CHECK(inv == alpha - AlgebraicNumber(1));
  CHECK_THROWS_AS(field_arith(alpha, AlgebraicNumber(f, {}), ArithOp::Div), DivisionByZero);
  auto g = AlgebraicNumber::generator(fifth_root2_field());
  CHECK_THROWS_AS(alpha + g, FieldMismatch);
  // Rational values mix freely with any field.
  CHECK((alpha + AlgebraicNumber(q("1/2"))).coords()[0] == q("1/2"));
}

TEST_CASE("field axioms hold exactly on random triples") {
  std::mt19937_64 rng(99);
  for (const auto &f : {sqrt2_field(), fifth_root2_field()}) {
    for (int i = 0; i < 40; ++i) {
      auto a = random_element(rng, f), b = random_element(rng, f), c = random_element(rng, f);
      CHECK((a + b) + c == a + (b + c));
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a * b == b * a);
      if (!a.is_zero())
        CHECK(a * a.inverse() == AlgebraicNumber(1));
    }
  }
}

TEST_CASE("minimal_polynomial and degree_over_q") {
  auto f = sqrt2_field();
  auto alpha = AlgebraicNumber::generator(f);
  CHECK(minimal_polynomial(AlgebraicNumber(q("1/2"))) == parse_unipoly("X - 1/2"));
  CHECK(minimal_polynomial(alpha + AlgebraicNumber(1)) == parse_unipoly("X^2 - 2X - 1"));
  CHECK(minimal_polynomial(alpha * alpha) == parse_unipoly("X - 2"));
  CHECK(degree_over_q(AlgebraicNumber(q("7/3"))) == 1);
  CHECK(degree_over_q(alpha) == 2);
  CHECK(degree_over_q(AlgebraicNumber::generator(fifth_root2_field())) == 5);

  std::mt19937_64 rng(5);
  for (const auto &fld : {sqrt2_field(), fifth_root2_field()}) {
    for (int i = 0; i < 25; ++i) {
      auto a = random_element(rng, fld);
      if (i % 5 == 0) // force some rational and lower-degree elements
        a = AlgebraicNumber(fld, {random_rational(rng)});
      UniPoly m = minimal_polynomial(a);
      AlgebraicNumber acc(0);
      for (auto it = m.coeffs().rbegin(); it != m.coeffs().rend(); ++it)
        acc = acc * a + AlgebraicNumber(*it);
      CHECK(acc.is_zero());
      CHECK(fld->degree() % static_cast<std::size_t>(m.degree()) == 0);
    }
  }
}

TEST_CASE("nth_root_field") {
  auto [f1, e1] = nth_root_field(Rational(4), 2);
  CHECK(f1->degree() == 1);
  CHECK(e1 == AlgebraicNumber(2));
  auto [f2, e2] = nth_root_field(q("8/27"), 3);
  CHECK(f2->degree() == 1);
  CHECK(e2 == AlgebraicNumber(q("2/3")));
  auto [f3, e3] = nth_root_field(Rational(2), 5);
  CHECK(f3->min_poly() == parse_unipoly("Y^5 - 2"));
  CHECK(RatInterval(Rational(1), Rational(2)).contains(e3.enclosure(Rational(1, 1000))));
  CHECK_THROWS_AS(nth_root_field(Rational(2), 4), UnsupportedDegree);
  CHECK_THROWS_AS(nth_root_field(Rational(-2), 3), PreconditionError);

  for (unsigned long m : {2ul, 3ul, 5ul, 7ul, 11ul})
    for (const char *c : {"2", "3/7", "10", "1/2"}) {
      auto [f, e] = nth_root_field(q(c), m);
      CHECK(e.pow(m) == AlgebraicNumber(q(c)));
      CHECK(degree_over_q(e) == m);
    }
}

TEST_CASE("interval_eval") {
  MultiPoly y1 = MultiPoly::variable(2, 0), y2 = MultiPoly::variable(2, 1);
  RatInterval unit(Rational(0), Rational(1));
  CHECK(interval_eval(MultiPoly::constant(2, AlgebraicNumber(3)), {unit, unit}) ==
        RatInterval(Rational(3)));
  CHECK(interval_eval(y1 + y2, {unit, unit}) == RatInterval(Rational(0), Rational(2)));
  MultiPoly y = MultiPoly::variable(1, 0);
  RatInterval r = interval_eval(y * y - MultiPoly::constant(1, AlgebraicNumber(2)),
                                {RatInterval(q("7/5"), q("3/2"))});
  CHECK(r.contains(RatInterval(q("-1/25"), q("1/4"))));

  SUBCASE("soundness on random boxes") {
    std::mt19937_64 rng(11);
    auto alpha = AlgebraicNumber::generator(sqrt2_field());
    for (int trial = 0; trial < 100; ++trial) {
      MultiPoly p(2);
      std::uniform_int_distribution<unsigned> e(0, 3);
      for (int t = 0; t < 4; ++t) {
        AlgebraicNumber c = trial % 4 == 0 ? AlgebraicNumber(random_rational(rng)) * alpha
                                           : AlgebraicNumber(random_rational(rng));
        p.add_term({e(rng), e(rng)}, c);
      }
      std::vector<RatInterval> box;
      for (int v = 0; v < 2; ++v) {
        Rational a = random_rational(rng, 5, 4), b = random_rational(rng, 5, 4);
        box.emplace_back(std::min(a, b), std::max(a, b));
      }
      RatInterval enc = interval_eval(p, box);
      std::uniform_int_distribution<long> k(0, 64);
      for (int s = 0; s < 10; ++s) {
        std::vector<AlgebraicNumber> pt;
        for (const auto &iv : box)
          pt.emplace_back(Rational(iv.lo() + iv.width() * Rational(k(rng), 64)));
        RatInterval v = p.eval(pt).enclosure(Rational(1, 1000000));
        CHECK(sgn(v.hi() - enc.lo()) >= 0);
        CHECK(sgn(enc.hi() - v.lo()) >= 0);
        // With a rational coefficient set the value itself is exact.
        if (auto exact = p.eval(pt).as_rational())
          CHECK(enc.contains(*exact));
      }
    }
  }
}

TEST_CASE("rational functions: canonical form and rf_eval") {
  MultiPoly y = MultiPoly::variable(1, 0);
  MultiPoly one = MultiPoly::constant(1, AlgebraicNumber(1));
  RationalFunction f = RationalFunction::variable(1, 0);
  CHECK(rf_eval(f, {AlgebraicNumber(5)}) == AlgebraicNumber(5));

  RationalFunction g(y - one, y + one);
  CHECK(rf_eval(g, {AlgebraicNumber(3)}) == AlgebraicNumber(q("1/2")));
  CHECK_THROWS_AS(rf_eval(g, {AlgebraicNumber(-1)}), PoleError);

  auto alpha = AlgebraicNumber::generator(sqrt2_field());
  RationalFunction prod(MultiPoly::variable(2, 0) * MultiPoly::variable(2, 1));
  auto v = rf_eval(prod, {alpha, AlgebraicNumber(1) + alpha});
  CHECK(v.coords() == std::vector<Rational>{Rational(2), Rational(1)});

  SUBCASE("common factors cancel and the denominator is normalized") {
    MultiPoly a = MultiPoly::variable(2, 0), b = MultiPoly::variable(2, 1);
    RationalFunction h((a + b) * (a - b), MultiPoly::constant(2, AlgebraicNumber(3)) * (a + b) * (a + b));
    RationalFunction expected(a - b, MultiPoly::constant(2, AlgebraicNumber(3)) * (a + b));
    CHECK(h == expected);
    CHECK(to_string(h) == "(1/3*Y1 - 1/3*Y2)/(Y1 + Y2)");
    CHECK((h * RationalFunction(a + b) / RationalFunction(a - b)).constant_value() ==
          AlgebraicNumber(q("1/3")));
  }
  SUBCASE("equal functions built differently compare equal") {
    RationalFunction x = RationalFunction::variable(1, 0);
    RationalFunction c1 = RationalFunction::constant(1, AlgebraicNumber(1));
    RationalFunction lhs = (x * x - c1) / (x - c1);
    CHECK(lhs == x + c1);
    RationalFunction r1 = c1 / (x - c1) + c1 / (x + c1);
    RationalFunction r2 = (RationalFunction::constant(1, AlgebraicNumber(2)) * x) / (x * x - c1);
    CHECK(r1 == r2);
  }
  SUBCASE("bivariate gcd with a shared nontrivial factor") {
    MultiPoly a = MultiPoly::variable(2, 0), b = MultiPoly::variable(2, 1);
    MultiPoly c1 = MultiPoly::constant(2, AlgebraicNumber(1));
    MultiPoly common = a * b + c1;
    MultiPoly g = gcd(common * (a - c1) * (a - c1), common * (b + a * a));
    CHECK(g == common);
  }
}
