#include "doctest.h"

#include "bss/errors.hpp"
#include "bss/machine/parser.hpp"
#include "bss/stdlib/stdlib.hpp"
#include "bss/symbolic/certificate.hpp"
#include "bss/symbolic/paths.hpp"
#include "bss/symbolic/serialize.hpp"
#include "bss/symbolic/shadow.hpp"

#include <random>

using namespace bss;

namespace {

Rational q(const char *s) { return parse_rational(s); }

RationalFunction Y(std::size_t arity = 1, std::size_t i = 0) { return RationalFunction::variable(arity, i); }
RationalFunction K(const Rational &c, std::size_t arity = 1) {
  return RationalFunction::constant(arity, AlgebraicNumber(c));
}

SymbolicTrace shadow(const std::string &name, Tuple in, std::size_t budget = 100000) {
  return shadow_trace(stdlib_program(name), in, Oracle::empty(), budget);
}

Rational random_rational(std::mt19937_64 &rng, long range, long den) {
  std::uniform_int_distribution<long> n(-range, range), d(1, den);
  Rational r(n(rng), d(rng));
  r.canonicalize();
  return r;
}

} // namespace

TEST_CASE("shadow_trace examples") {
  SUBCASE("sgn on 5") {
    auto t = shadow("sgn", {AlgebraicNumber(5)});
    REQUIRE(t.branches.size() == 1);
    CHECK(t.branches[0].f == Y());
    CHECK(t.branches[0].sign == 1);
    CHECK(t.output_functions == std::vector<RationalFunction>{K(1)});
    CHECK(extract_f(t) == std::vector<RationalFunction>{Y()});
  }
  SUBCASE("(x+1)^2 on 3 and on sqrt2") {
    auto t = shadow("shifted_square", {AlgebraicNumber(3)});
    CHECK(t.output_functions[0] == (Y() + K(1)) * (Y() + K(1)));
    CHECK(t.output[0] == AlgebraicNumber(16));
    CHECK(extract_f(t).empty());
    FieldRegistry reg;
    auto r2 = parse_value("sqrt2:(0,1)", reg);
    Program p = stdlib_program("shifted_square");
    auto t2 = shadow_trace(p, {r2}, Oracle::empty(), 100);
    CHECK(t2.output[0] == parse_value("sqrt2:(3,2)", reg));
    auto fb = field_boundary_check(p, t2);
    CHECK(fb.ok);
    CHECK_FALSE(fb.all_rational);
  }
  SUBCASE("1/(x-1) on 3") {
    auto t = shadow("reciprocal", {AlgebraicNumber(3)});
    REQUIRE(t.branches.size() == 1);
    CHECK(t.branches[0].f == Y() - K(1));
    CHECK(t.branches[0].sign == 1);
    CHECK(t.output_functions[0] == K(1) / (Y() - K(1)));
    CHECK(t.output[0] == AlgebraicNumber(q("1/2")));
    CHECK(extract_f(t) == std::vector<RationalFunction>{Y() - K(1)});
  }
  SUBCASE("constant program") {
    auto t = shadow("const_zero", {AlgebraicNumber(3), AlgebraicNumber(4)});
    CHECK(extract_f(t).empty());
    CHECK(t.output_functions[0].is_zero());
  }
  SUBCASE("non-halted traces are rejected by extract_f") {
    auto t = shadow("reciprocal", {AlgebraicNumber(1)}, 50);
    CHECK(t.status == RunStatus::BudgetExhausted);
    CHECK_THROWS_AS(extract_f(t), PreconditionError);
  }
  SUBCASE("oracle queries under both policies") {
    Program toy = stdlib_program("oracle_toy");
    Tuple in{AlgebraicNumber(5), AlgebraicNumber(7)};
    auto concrete = shadow_trace(toy, in, Oracle::rationals(), 100, OraclePolicy::Concrete);
    CHECK(concrete.output[0] == AlgebraicNumber(1));
    auto generic = shadow_trace(toy, in, Oracle::rationals(), 100, OraclePolicy::Generic);
    CHECK(generic.output[0] == AlgebraicNumber(0));
    REQUIRE(generic.oracles.size() == 1);
    CHECK_FALSE(generic.oracles[0].was_constant);
    CHECK(generic.oracles[0].query[0] == Y(2, 1));
    CHECK(extract_f(generic) == std::vector<RationalFunction>{Y(2, 1)});
  }
}

TEST_CASE("shadow agreement and the field boundary across the library") {
  std::mt19937_64 rng(41);
  for (const auto &e : stdlib_entries()) {
    CAPTURE(e.name);
    Program p = stdlib_program(e.name);
    for (int i = 0; i < 10; ++i) {
      Tuple in;
      for (std::size_t k = 0; k < e.arity; ++k)
        in.emplace_back(random_rational(rng, 6, 5));
      auto t = shadow_trace(p, in, Oracle::rationals(), 3000);
      auto fb = field_boundary_check(p, t);
      CHECK(fb.ok);
      CHECK(fb.all_rational);
      // Branch functions are inputs, constants or values written earlier.
      std::vector<RationalFunction> seen;
      for (std::size_t k = 0; k < e.arity; ++k)
        seen.push_back(Y(e.arity, k));
      std::size_t b = 0;
      for (const auto &s : t.steps) {
        if (b < t.branches.size() && t.branches[b].pc == s.pc &&
            std::holds_alternative<BranchInstr>(p.instructions[s.pc])) {
          const auto &f = t.branches[b].f;
          CHECK((f.is_constant() || std::find(seen.begin(), seen.end(), f) != seen.end()));
          ++b;
        }
        for (const auto &w : s.writes)
          seen.push_back(w.f);
      }
      if (t.status == RunStatus::Halted)
        for (const auto &f : extract_f(t))
          CHECK_FALSE(f.is_constant());
    }
  }
}

TEST_CASE("epsilon_certificate") {
  CHECK(epsilon_certificate({Y()}, {AlgebraicNumber(5)}).epsilon == 1);
  auto c = epsilon_certificate({Y()}, {AlgebraicNumber(5)});
  CHECK(c.enclosures[0].first.contains(RatInterval(Rational(4), Rational(6))));
  CHECK(c.enclosures[0].first.excludes_zero());
  CHECK(epsilon_certificate({Y() - K(1)}, {AlgebraicNumber(2)}).epsilon == q("1/2"));
  CHECK(epsilon_certificate({}, {AlgebraicNumber(7)}).epsilon == 1);
  CHECK_THROWS_AS(epsilon_certificate({Y() - K(1)}, {AlgebraicNumber(1)}), PreconditionError);
  CHECK_THROWS_AS(epsilon_certificate({K(1) / (Y() - K(1))}, {AlgebraicNumber(1)}), PreconditionError);
  CHECK_THROWS_AS(epsilon_certificate({Y() - K(q("1/1000000"))}, {AlgebraicNumber(q("2/1000000"))}, 5),
                  CertificateFailure);
  FieldRegistry reg;
  auto r2 = parse_value("sqrt2:(0,1)", reg);
  auto cs = epsilon_certificate({Y() * Y() - K(2), Y() - K(1)}, {r2 + AlgebraicNumber(q("1/100"))});
  CHECK(check_certificate(cs));
  CHECK(cs.epsilon <= q("1/64"));
}

TEST_CASE("verify_neighborhood") {
  SUBCASE("sgn at 5") {
    Program p = stdlib_program("sgn");
    auto t = shadow_trace(p, {AlgebraicNumber(5)}, Oracle::empty(), 100);
    auto cert = epsilon_certificate(extract_f(t), t.input);
    auto r = verify_neighborhood(p, Oracle::empty(), t, cert, 20, 1);
    CHECK(r.ok());
    for (const auto &s : r.samples)
      CHECK(s.point[0].as_rational() > 0);
  }
  SUBCASE("interval_member at 3/4") {
    Program p = stdlib_program("interval_member");
    auto t = shadow_trace(p, {AlgebraicNumber(q("3/4"))}, Oracle::empty(), 100);
    auto cert = epsilon_certificate(extract_f(t), t.input);
    CHECK(cert.epsilon == q("1/8"));
    auto r = verify_neighborhood(p, Oracle::empty(), t, cert, 20, 2);
    CHECK(r.passed == 20);
    for (const auto &s : r.samples)
      CHECK(s.point[0].as_rational() > q("1/2"));
  }
  SUBCASE("constant program") {
    Program p = stdlib_program("const_zero");
    auto t = shadow_trace(p, {AlgebraicNumber(1), AlgebraicNumber(2)}, Oracle::empty(), 100);
    auto cert = epsilon_certificate(extract_f(t), t.input);
    CHECK(verify_neighborhood(p, Oracle::empty(), t, cert, 30, 3).ok());
  }
  SUBCASE("an overstated certificate is caught") {
    Program p = stdlib_program("sgn");
    auto t = shadow_trace(p, {AlgebraicNumber(q("1/10"))}, Oracle::empty(), 100);
    EpsilonCertificate bogus{t.input, Rational(1), {RatInterval(Rational(-1), Rational(2))}, {}, {}};
    auto r = verify_neighborhood(p, Oracle::empty(), t, bogus, 40, 4);
    CHECK_FALSE(r.ok());
    CHECK_FALSE(check_certificate(EpsilonCertificate{t.input, Rational(1),
                                                     {RatInterval(Rational(-1), Rational(2))},
                                                     {Y()},
                                                     {}}));
  }
  SUBCASE("signs are constant on certified boxes") {
    std::mt19937_64 rng(8);
    Program p = stdlib_program("even_zeros");
    for (int i = 0; i < 10; ++i) {
      Rational x = random_rational(rng, 40, 41);
      auto t = shadow_trace(p, {AlgebraicNumber(x)}, Oracle::empty(), 1000);
      bool equality = false;
      for (const auto &b : t.branches)
        equality = equality || (b.sign == 0 && !b.f.is_constant());
      if (equality)
        continue;
      auto cert = epsilon_certificate(extract_f(t), t.input);
      auto r = verify_neighborhood(p, Oracle::empty(), t, cert, 20, i);
      for (const auto &s : r.samples)
        CHECK(s.same_signs);
    }
  }
}

TEST_CASE("explore_paths") {
  SUBCASE("sgn") {
    auto tree = explore_paths(stdlib_program("sgn"), 1, Oracle::empty(), {10});
    REQUIRE(tree.leaves.size() == 3);
    for (std::size_t i = 0; i < 3; ++i) {
      const auto &l = tree.leaves[i];
      CHECK(l.outcome == LeafOutcome::Halted);
      REQUIRE(l.condition.constraints.size() == 1);
      CHECK(l.condition.constraints[0].f == Y());
      CHECK(l.condition.constraints[0].sign == static_cast<int>(i) - 1);
      CHECK(l.output[0] == K(static_cast<long>(i) - 1));
    }
    CHECK(tree.leaves[1].measure_zero);
    CHECK_FALSE(tree.leaves[2].measure_zero);
  }
  SUBCASE("constant program") {
    auto tree = explore_paths(stdlib_program("const_zero"), 2, Oracle::empty(), {10});
    REQUIRE(tree.leaves.size() == 1);
    CHECK(tree.leaves[0].condition.constraints.empty());
  }
  SUBCASE("interval_member partitions by the signs of Y-1/2 and Y-1") {
    auto tree = explore_paths(stdlib_program("interval_member"), 1, Oracle::empty(), {20});
    CHECK(tree.leaves.size() == 5);
    for (const auto &l : tree.leaves) {
      REQUIRE(l.outcome == LeafOutcome::Halted);
      bool inside = true;
      for (const auto &k : l.condition.constraints) {
        if (k.f == Y() - K(q("1/2")))
          inside = inside && k.sign >= 0;
        else if (k.f == Y() - K(1))
          inside = inside && k.sign <= 0;
        else
          FAIL("unexpected constraint " << to_string(k.f));
      }
      CHECK(l.output[0] == K(inside ? 1 : 0));
    }
  }
  SUBCASE("oracle splits") {
    Program toy = stdlib_program("oracle_toy");
    auto both = explore_paths(toy, 2, Oracle::rationals(), {10});
    CHECK(both.leaves.size() == 2);
    CHECK(both.leaves[0].condition.oracle_assumptions[0].answer);
    ExploreOptions generic{10};
    generic.generic_oracle = true;
    auto one = explore_paths(toy, 2, Oracle::rationals(), generic);
    REQUIRE(one.leaves.size() == 1);
    CHECK(one.leaves[0].output[0] == K(0, 2));
  }
  SUBCASE("unguarded division forks and faults on the zero branch") {
    Program p = parse_program("PROGRAM d\nARITY 1\n  CONST c1 1\n  DIV c1 c1 c0\n  OUTPUT c1..c1\n");
    auto tree = explore_paths(p, 1, Oracle::empty(), {5});
    REQUIRE(tree.leaves.size() == 3);
    CHECK(tree.leaves[1].outcome == LeafOutcome::Fault);
    CHECK(tree.leaves[1].fault == FaultKind::DivisionByZero);
    CHECK(tree.leaves[2].output[0] == K(1) / Y());
  }
  SUBCASE("scalar multiples reuse the known sign") {
    Program p = parse_program("PROGRAM m\nARITY 1\n  CONST c1 -3\n  MUL c2 c0 c1\n"
                              "  BRANCH c0 a a b\na: OUTPUT c1..c1\nb: BRANCH c2 x x y\nx: OUTPUT c0..c0\n"
                              "y: OUTPUT c2..c2\n");
    auto tree = explore_paths(p, 1, Oracle::empty(), {5});
    CHECK(tree.leaves.size() == 3);
  }
  SUBCASE("every halt of the semideciders needs an equality") {
    auto tree = explore_paths(stdlib_program("algebraic_semidecider"), 1, Oracle::empty(), {6, 200000});
    std::size_t halted = 0;
    for (const auto &l : tree.leaves)
      if (l.outcome == LeafOutcome::Halted) {
        ++halted;
        CHECK(l.measure_zero);
      }
    CHECK(halted > 0);
    auto dep = explore_paths(stdlib_program("dependence"), 2, Oracle::empty(), {4, 200000});
    halted = 0;
    for (const auto &l : dep.leaves)
      if (l.outcome == LeafOutcome::Halted) {
        ++halted;
        CHECK(l.measure_zero);
        CHECK_FALSE(l.condition.constraints.empty());
      }
    CHECK(halted > 0);
  }
}

TEST_CASE("boundary_report") {
  auto roots = [](const std::vector<MultiPoly> &ps) {
    std::vector<Rational> out;
    for (const auto &p : ps) {
      UniPoly u = p.to_unipoly();
      for (const auto &iv : sturm_isolate(u)) {
        RatInterval fine = refine_root(SturmSequence(u), iv, Rational(1, 1000000));
        out.push_back(fine.midpoint());
      }
    }
    std::sort(out.begin(), out.end());
    return out;
  };
  auto pos = boundary_report(explore_paths(stdlib_program("positive"), 1, Oracle::empty()));
  CHECK(pos == std::vector<MultiPoly>{Y().numerator()});
  auto im = boundary_report(explore_paths(stdlib_program("interval_member"), 1, Oracle::empty()));
  CHECK(im.size() == 2);
  auto r = roots(im);
  REQUIRE(r.size() == 2);
  CHECK(abs(r[0] - q("1/2")) < q("1/100000"));
  CHECK(abs(r[1] - 1) < q("1/100000"));
  for (const auto &p : im) {
    bool exact = p.to_unipoly().eval(q("1/2")) == 0 || p.to_unipoly().eval(Rational(1)) == 0;
    CHECK(exact);
  }
  CHECK(boundary_report(explore_paths(stdlib_program("const_zero"), 2, Oracle::empty())).empty());
  auto sg = boundary_report(explore_paths(stdlib_program("sgn"), 1, Oracle::empty()));
  CHECK(sg == std::vector<MultiPoly>{Y().numerator()});
  Program same = parse_program("PROGRAM s\nARITY 1\n  CONST c1 1\n  BRANCH c0 a a a\na: OUTPUT c1..c1\n");
  CHECK(boundary_report(explore_paths(same, 1, Oracle::empty())).empty());
  CHECK_THROWS_AS(boundary_report(explore_paths(stdlib_program("reciprocal"), 1, Oracle::empty(), {5, 100})),
                  PreconditionError);
  Program scaled = parse_program("PROGRAM t\nARITY 1\n  CONST c1 -2\n  MUL c2 c0 c1\n  BRANCH c2 a b b\n"
                                 "a: OUTPUT c1..c1\nb: OUTPUT c2..c2\n");
  CHECK_THROWS_AS(boundary_report(explore_paths(scaled, 1, Oracle::empty())), PreconditionError);
}

TEST_CASE("path exclusivity on random inputs") {
  std::mt19937_64 rng(12);
  for (const char *name : {"sgn", "interval_member", "even_zeros", "reciprocal"}) {
    CAPTURE(name);
    Program p = stdlib_program(name);
    auto tree = explore_paths(p, 1, Oracle::empty(), {30});
    for (int i = 0; i < 40; ++i) {
      AlgebraicNumber x(random_rational(rng, 30, 20));
      std::size_t hits = 0, which = 0;
      for (std::size_t k = 0; k < tree.leaves.size(); ++k)
        if (tree.leaves[k].outcome == LeafOutcome::Halted &&
            satisfies(tree.leaves[k].condition, {x}, Oracle::empty())) {
          ++hits;
          which = k;
        }
      auto run = run_concrete(p, {x}, Oracle::empty(), {10000, false});
      if (run.status != RunStatus::Halted) {
        CHECK(hits == 0);
        continue;
      }
      REQUIRE(hits == 1);
      CHECK(run.history == tree.leaves[which].history);
      CHECK(run.output[0] == rf_eval(tree.leaves[which].output[0], {x}));
    }
  }
}

TEST_CASE("serialization") {
  Program p = stdlib_program("reciprocal");
  auto t = shadow_trace(p, {AlgebraicNumber(3)}, Oracle::empty(), 100);
  auto j = shadow_to_json(t, field_boundary_check(p, t));
  CHECK(j["output_functions"][0] == "(1)/(Y - 1)");
  CHECK(j["branches"][0]["f"] == "Y - 1");
  CHECK(j["field_boundary"]["ok"] == true);
  auto cert = epsilon_certificate(extract_f(t), t.input);
  auto cj = certificate_to_json(cert);
  CHECK(cj["epsilon"] == "1");
  CHECK(cj["functions"][0]["numerator"][0] == "1");
  auto tree = explore_paths(stdlib_program("sgn"), 1, Oracle::empty());
  auto tj = tree_to_json(tree);
  CHECK(tj["leaves"].size() == 3);
  CHECK(tj["nodes"][0]["labels"] == nlohmann::json({-1, 0, 1}));
  CHECK(format_tree(tree).find("leaf 0 halted output=(-1) {Y <0}") == 0);
  CHECK(format_shadow(p, t).find("branch pc=2 Y - 1 >0") != std::string::npos);
}
