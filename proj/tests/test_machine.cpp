#include "doctest.h"

#include "bss/errors.hpp"
#include "bss/machine/cantor.hpp"
#include "bss/machine/interpreter.hpp"
#include "bss/machine/parser.hpp"
#include "bss/machine/trace_io.hpp"

#include <random>
#include <set>

using namespace bss;

namespace {

const char *kSgn = R"(PROGRAM sgn
ARITY 1
    BRANCH c0 neg zero pos
neg:  CONST c1 -1
      OUTPUT c1..c1
zero: CONST c1 0
      OUTPUT c1..c1
pos:  CONST c1 1
      OUTPUT c1..c1
)";

Rational q(const char *s) { return parse_rational(s); }

RunResult run(const std::string &src, Tuple in, std::size_t budget = 1000,
              const Oracle &o = Oracle::empty()) {
  return run_concrete(parse_program(src), in, o, {budget, true});
}

// Independent membership test: long division in base 3. A 1 digit is only
// allowed as the final nonzero digit of a terminating expansion, where it
// can be rewritten as 0222...
bool cantor_by_digits(const Rational &x) {
  if (x < 0 || x > 1)
    return false;
  if (x == 1)
    return true;
  Integer num = x.get_num(), den = x.get_den();
  std::set<Integer> seen;
  while (num != 0 && seen.insert(num).second) {
    num *= 3;
    Integer d = num / den;
    num -= d * den;
    if (d == 1)
      return num == 0;
  }
  return true;
}

} // namespace

TEST_CASE("parse_program and the printer") {
  Program p = parse_program(kSgn);
  CHECK(p.name == "sgn");
  CHECK(p.arity == std::optional<std::size_t>(1));
  CHECK(p.size() == 7);
  CHECK(p.labels.size() == 3);
  CHECK(p.label_pc("zero") == std::optional<std::size_t>(3));
  CHECK(parse_program(print_program(p)) == p);

  SUBCASE("unresolved label") {
    try {
      parse_program("PROGRAM t\nARITY 1\n  JMP L9\n");
      FAIL("expected a parse error");
    } catch (const ParseError &e) {
      CHECK(std::string(e.what()).find("L9") != std::string::npos);
      CHECK(e.line() == 3);
    }
  }
  SUBCASE("syntax errors carry the line") {
    try {
      parse_program("PROGRAM t\nARITY 1\n  CONST c0 1\n  FROB c1\n");
      FAIL("expected a parse error");
    } catch (const ParseError &e) {
      CHECK(e.line() == 4);
    }
    CHECK_THROWS_AS(parse_program("PROGRAM t\nARITY 1\n  ADD c0 c1\n"), ParseError);
    CHECK_THROWS_AS(parse_program("PROGRAM t\nARITY 1\n  OUTPUT c3..c1\n"), ParseError);
    CHECK_THROWS_AS(parse_program("PROGRAM t\nARITY 1\nx: JMP x\nx: JMP x\n"), ParseError);
    CHECK_THROWS_AS(parse_program("ARITY 1\n  JMP e\ne:\n"), ParseError);
  }
  SUBCASE("parameters") {
    CHECK_THROWS_AS(parse_program("PROGRAM t\nARITY 1\nPARAM a = 1/2\n  CONST c1 $3\n"), ParseError);
    CHECK_THROWS_AS(parse_program("PROGRAM t\nARITY 1\n  CONST c1 $b\n"), ParseError);
    Program pp = parse_program("PROGRAM t\nARITY 1\nPARAM a = 1/2\nPARAM r = sqrt2:(0,1)\n"
                               "  CONST c1 $1\n  CONST c2 $a\n  OUTPUT c1..c2\n");
    auto c = std::get<ConstInstr>(pp.instructions[0]);
    CHECK(c.param == std::optional<std::size_t>(1));
    CHECK(parse_program(print_program(pp)) == pp);
  }
  SUBCASE("CMP sugar, trailing labels, VAR arity, ZERO, variable output") {
    Program pp = parse_program("PROGRAM t\nARITY VAR\nZERO 5..7\n"
                               "top: CMP c1 c2 c3 a b c\na:\nb: OUTPUT c1..+c0\nc:\n");
    CHECK(pp.size() == 3);
    CHECK(std::holds_alternative<ArithInstr>(pp.instructions[0]));
    CHECK(std::get<BranchInstr>(pp.instructions[1]).pos.pc == 3);
    CHECK(!pp.arity);
    CHECK(parse_program(print_program(pp)) == pp);
  }
}

TEST_CASE("run_concrete basics") {
  auto r = run(kSgn, {q("-3")});
  CHECK(r.status == RunStatus::Halted);
  CHECK(r.output == Tuple{AlgebraicNumber(-1)});
  CHECK(run(kSgn, {q("0")}).output == Tuple{AlgebraicNumber(0)});
  CHECK(run(kSgn, {q("2/7")}).output == Tuple{AlgebraicNumber(1)});
  CHECK(r.steps == 3);
  CHECK(r.history == std::vector<Decision>{{0, false, -1}});

  FieldRegistry reg;
  auto s2 = parse_value("sqrt2:(-3/2,1)", reg);
  CHECK(run(kSgn, {s2}).output == Tuple{AlgebraicNumber(-1)});

  SUBCASE("faults and budgets") {
    auto div = run("PROGRAM d\nARITY 1\n  CONST c1 0\n  DIV c2 c0 c1\n  OUTPUT c2..c2\n", {q("1")});
    CHECK(div.status == RunStatus::Fault);
    CHECK(div.fault == FaultKind::DivisionByZero);
    CHECK(div.output.empty());
    auto blank = run("PROGRAM b\nARITY 1\n  ADD c2 c0 c1\n", {q("1")});
    CHECK(blank.fault == FaultKind::BlankRead);
    auto loop = run("PROGRAM l\nARITY 0\nx: JMP x\n", {}, 50);
    CHECK(loop.status == RunStatus::BudgetExhausted);
    CHECK(loop.steps == 50);
    auto empty = run("PROGRAM e\nARITY 0\n", {}, 0);
    CHECK(empty.status == RunStatus::Halted);
    CHECK(empty.output.empty());
    auto unsupported = run("PROGRAM o\nARITY 2\n  ORACLE c0..c1 y y\ny:\n", {q("1"), q("2")}, 10,
                           Oracle::degree_eq(1));
    CHECK(unsupported.fault == FaultKind::OracleUnsupported);
    CHECK_THROWS_AS(run(kSgn, {q("1"), q("2")}), PreconditionError);
  }
  SUBCASE("tape, VAR arity and the ZERO window") {
    auto back = run("PROGRAM s\nARITY 2\n  SHIFTR\n  SHIFTL\n  OUTPUT c0..c1\n", {q("4"), q("5")});
    CHECK(back.output == Tuple{AlgebraicNumber(4), AlgebraicNumber(5)});
    auto off = run("PROGRAM s\nARITY 1\n  SHIFTL\n  OUTPUT c0..c0\n", {q("4")});
    CHECK(off.fault == FaultKind::BlankRead);
    auto moved = run("PROGRAM s\nARITY 1\n  SHIFTL\n  CONST c0 7\n  SHIFTR\n  SHIFTR\n  CONST c0 8\n"
                     "  SHIFTL\n  SHIFTL\n  OUTPUT c0..c2\n", {q("4")});
    CHECK(moved.output == Tuple{AlgebraicNumber(7), AlgebraicNumber(4), AlgebraicNumber(8)});
    auto var = run("PROGRAM v\nARITY VAR\n  OUTPUT c0..c3\n", {q("4"), q("5"), q("6")});
    CHECK(var.output == Tuple{AlgebraicNumber(3), AlgebraicNumber(4), AlgebraicNumber(5), AlgebraicNumber(6)});
    auto z = run("PROGRAM z\nARITY 0\nZERO 0..2\n  OUTPUT c0..c2\n", {});
    CHECK(z.output == Tuple{AlgebraicNumber(0), AlgebraicNumber(0), AlgebraicNumber(0)});
    auto len = run("PROGRAM v\nARITY VAR\n  OUTPUT c1..+c0\n", {q("4"), q("5")});
    CHECK(len.output == Tuple{AlgebraicNumber(4), AlgebraicNumber(5)});
    auto badlen = run("PROGRAM v\nARITY 1\n  OUTPUT c0..+c0\n", {q("1/2")});
    CHECK(badlen.fault == FaultKind::InvalidOutputLength);
    auto shifted = run("PROGRAM s\nARITY 2\n  SHIFTR\n  OUTPUT c0..c0\n", {q("4"), q("5")});
    CHECK(shifted.output == Tuple{AlgebraicNumber(5)});
  }
}

TEST_CASE("determinism and step monotonicity") {
  const char *count = "PROGRAM c\nARITY 1\n  CONST c1 1\nl: SUB c0 c0 c1\n  BRANCH c0 d d l\nd: OUTPUT c0..c0\n";
  auto a = run(count, {q("20")}, 1000), b = run(count, {q("20")}, 1000);
  CHECK(format_trace(parse_program(count), a) == format_trace(parse_program(count), b));
  CHECK(a.steps == 42);
  for (std::size_t budget : {1ul, 10ul, 41ul}) {
    auto r = run(count, {q("20")}, budget);
    CHECK(r.status == RunStatus::BudgetExhausted);
    CHECK(r.steps <= budget);
  }
  for (std::size_t budget : {42ul, 43ul, 5000ul}) {
    auto r = run(count, {q("20")}, budget);
    CHECK(r.status == RunStatus::Halted);
    CHECK(r.steps == 42);
    CHECK(r.output == a.output);
  }
}

TEST_CASE("field boundary on rational runs: every written value has degree 1") {
  const char *prog = "PROGRAM p\nARITY 2\nPARAM k = 3/7\n  CONST c2 $k\n  MUL c3 c0 c2\n"
                     "  DIV c4 c3 c1\n  ADD c5 c4 c0\n  OUTPUT c5..c5\n";
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<long> d(-30, 30);
  for (int i = 0; i < 50; ++i) {
    Rational x(d(rng), 7), y(d(rng) == 0 ? 1 : 13, 5);
    x.canonicalize();
    y.canonicalize();
    auto r = run(prog, {x, y});
    for (const auto &ts : r.trace)
      for (const auto &[cell, v] : ts.writes)
        CHECK(degree_over_q(v) == 1);
  }
}

TEST_CASE("oracle_query") {
  FieldRegistry reg;
  auto s2 = parse_value("sqrt2:(0,1)", reg);
  CHECK(oracle_query(Oracle::rationals(), {AlgebraicNumber(q("3/4"))}));
  CHECK_FALSE(oracle_query(Oracle::rationals(), {s2}));
  CHECK(oracle_query(Oracle::rationals(), {}));
  CHECK(oracle_query(Oracle::degree_eq(2), {s2}));
  CHECK_FALSE(oracle_query(Oracle::degree_eq(2), {s2 * s2}));
  CHECK(oracle_query(Oracle::degree_leq(2), {s2 * s2}));
  CHECK(oracle_query(Oracle::algebraic(), {s2, AlgebraicNumber(1)}));
  CHECK_FALSE(oracle_query(Oracle::empty(), {s2}));
  CHECK(oracle_query(Oracle::cantor(), {AlgebraicNumber(q("1/4"))}));
  CHECK_THROWS_AS(oracle_query(Oracle::cantor(), {s2}), OracleUnsupported);
  CHECK_THROWS_AS(oracle_query(Oracle::degree_eq(1), {s2, s2}), OracleUnsupported);

  SUBCASE("finite sets answer exactly on their members") {
    std::vector<Tuple> members = {{AlgebraicNumber(1), AlgebraicNumber(2)},
                                  {AlgebraicNumber(q("1/2")), AlgebraicNumber(0)},
                                  {AlgebraicNumber(3)}};
    Oracle o = Oracle::finite(members);
    std::vector<Rational> grid = {q("0"), q("1/2"), q("1"), q("2"), q("3")};
    for (const auto &a : grid) {
      CHECK(oracle_query(o, {AlgebraicNumber(a)}) == (a == 3));
      for (const auto &b : grid) {
        bool expected = (a == 1 && b == 2) || (a == q("1/2") && b == 0);
        CHECK(oracle_query(o, {AlgebraicNumber(a), AlgebraicNumber(b)}) == expected);
      }
    }
    CHECK_FALSE(oracle_query(o, {s2, AlgebraicNumber(2)}));
  }
}

TEST_CASE("cantor_membership") {
  CHECK(cantor_membership(q("1/4")));
  CHECK_FALSE(cantor_membership(q("1/2")));
  CHECK(cantor_membership(q("1")));
  CHECK(cantor_membership(q("0")));
  CHECK(cantor_membership(q("1/3")));
  CHECK(cantor_membership(q("2/3")));
  CHECK_FALSE(cantor_membership(q("-1/9")));
  CHECK_FALSE(cantor_membership(q("4/3")));

  std::mt19937_64 rng(17);
  for (int i = 0; i < 400; ++i) {
    std::uniform_int_distribution<long> den(1, 200);
    long d = den(rng);
    std::uniform_int_distribution<long> num(-5, d + 5);
    Rational x(num(rng), d);
    x.canonicalize();
    CHECK(cantor_membership(x) == cantor_by_digits(x));
  }
  SUBCASE("appending 00 or 22 to a terminating member stays in C") {
    for (int i = 0; i < 100; ++i) {
      Rational x(0), scale(1);
      std::uniform_int_distribution<int> len(0, 8), bit(0, 1);
      int k = len(rng);
      for (int j = 0; j < k; ++j) {
        scale /= 3;
        x += scale * (2 * bit(rng));
      }
      REQUIRE(cantor_membership(x));
      Rational t = scale / 9;
      CHECK(cantor_membership(x + 2 * scale / 3 + 2 * t));
      CHECK(cantor_membership(x));
    }
  }
}

TEST_CASE("trace formats") {
  Program p = parse_program(kSgn);
  auto r = run_concrete(p, {AlgebraicNumber(5)}, Oracle::empty(), {100, true});
  std::string text = format_trace(p, r);
  CHECK(text.find("1 0 BRANCH c0 neg zero pos writes=[] branch=+1 oracle=-") == 0);
  CHECK(text.find("writes=[c1=1]") != std::string::npos);
  CHECK(format_result(r) == "halted steps=3 output=(1)");
  auto j = run_to_json(p, r);
  CHECK(j["status"] == "halted");
  CHECK(j["output"][0] == "1");
  CHECK(j["trace"].size() == 3);
  CHECK(j["trace"][0]["branch"] == 1);

  Program toy = parse_program("PROGRAM t\nARITY 1\n  ORACLE c0..c0 y n\ny: OUTPUT c0..c0\nn: OUTPUT c0..c0\n");
  auto ro = run_concrete(toy, {AlgebraicNumber(q("1/4"))}, Oracle::rationals(), {10, true});
  CHECK(format_trace(toy, ro).find("oracle=(1/4)->yes") != std::string::npos);
}
