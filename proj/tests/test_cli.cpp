#include "doctest.h"

#include "cli.hpp"

#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>

using namespace bss;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result bss_cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = dispatch(args, out, err);
  return {code, out.str(), err.str()};
}

bool has(const std::string &text, const std::string &needle) {
  return text.find(needle) != std::string::npos;
}

} // namespace

TEST_CASE("run") {
  auto r = bss_cli({"run", "--stdlib", "sgn", "--input", "(-3)"});
  CHECK(r.code == 0);
  CHECK(r.out == "halted steps=3 output=(-1)\n");
  r = bss_cli({"run", "--stdlib", "interval_member", "--param", "0", "--param", "2", "--input", "(3/2)"});
  CHECK(r.code == 0);
  CHECK(has(r.out, "output=(1)"));
  r = bss_cli({"run", "--stdlib", "reciprocal", "--input", "(1)", "--budget", "40"});
  CHECK(r.code == 0);
  CHECK(has(r.out, "budget_exhausted steps=40"));
  r = bss_cli({"run", "--stdlib", "shifted_square", "--input", "(r3:(0,1))", "--field", "r3=X^2 - 3;1;2"});
  CHECK(r.code == 0);
  CHECK(has(r.out, "output=(r3:(4,2))"));
  r = bss_cli({"run", "--stdlib", "sgn", "--input", "(2)", "--trace"});
  CHECK(has(r.out, "BRANCH"));
}

TEST_CASE("certify, cantor and witness") {
  auto r = bss_cli({"certify", "--stdlib", "sgn", "--input", "(5)", "--samples", "20"});
  CHECK(r.code == 0);
  CHECK(has(r.out, "epsilon 1\n"));
  CHECK(has(r.out, "20/20 samples pass"));

  r = bss_cli({"cantor", "--decompose", "73/81"});
  CHECK(r.code == 0);
  CHECK(has(r.out, "c1 = 8/9"));
  CHECK(has(r.out, "c2 = 2/81"));
  CHECK(has(r.out, "exact"));
  r = bss_cli({"cantor", "--member", "1/4"});
  CHECK(has(r.out, "1/4 is in the Cantor set"));
  r = bss_cli({"cantor", "--member", "1/2", "--format", "json"});
  CHECK(nlohmann::json::parse(r.out)["member"] == false);

  r = bss_cli({"witness", "--stdlib", "oracle_toy", "--oracle", "rationals", "--input", "(5, 7)"});
  CHECK(r.code == 0);
  CHECK(has(r.out, "verdict counterexample_confirmed"));
  r = bss_cli({"witness", "--stdlib", "diagonal_eq", "--input", "(5, 5)", "--format", "json"});
  CHECK(r.code == 0);
  CHECK(nlohmann::json::parse(r.out)["verdict"] == "pipeline_inapplicable");
}

TEST_CASE("falsified analyses exit 1 with a failure record") {
  auto r = bss_cli({"witness", "--stdlib", "oracle_toy", "--oracle", "algebraic", "--input", "(5, 7)"});
  CHECK(r.code == 1);
  auto rec = nlohmann::json::parse(r.err);
  CHECK(rec["failure"] == "witness");
  CHECK(rec["detail"]["verdict"] == "not_confirmed");
  // Around 1/4 the Cantor oracle answers no almost everywhere, which no
  // sign condition on F = {Y} records.
  std::string path = "bss_cli_cantor.bss";
  {
    std::ofstream f(path);
    f << "PROGRAM in_c\nARITY 1\n  CONST c1 1\n  ORACLE c0..c0 yes no\n"
         "yes: OUTPUT c1..c1\nno: OUTPUT c0..c0\n";
  }
  r = bss_cli({"certify", "--program", path, "--input", "(1/4)", "--oracle", "cantor", "--samples", "50"});
  CHECK(r.code == 1);
  rec = nlohmann::json::parse(r.err);
  CHECK(rec["failure"] == "certify");
  CHECK(rec["detail"]["ok"] == false);
  r = bss_cli({"certify", "--program", path, "--input", "(1/4)", "--samples", "50"});
  CHECK(r.code == 0);
  CHECK(bss_cli({"certify", "--program", "missing.bss", "--input", "(1)"}).code == 2);
  std::remove(path.c_str());
}

TEST_CASE("usage errors exit 2") {
  CHECK(bss_cli({}).code == 2);
  CHECK(bss_cli({"frobnicate"}).code == 2);
  CHECK(bss_cli({"run", "--stdlib", "nope"}).code == 2);
  CHECK(bss_cli({"run", "--stdlib", "sgn", "--program", "x.bss"}).code == 2);
  CHECK(bss_cli({"run", "--stdlib", "sgn", "--input", "(1"}).code == 2);
  CHECK(bss_cli({"run", "--stdlib", "sgn", "--input", "(1)", "--oracle", "magic"}).code == 2);
  CHECK(bss_cli({"run", "--stdlib", "sgn", "--input", "(1)", "--budget", "0"}).code == 2);
  CHECK(bss_cli({"run", "--stdlib", "sgn", "--input", "(1)", "--format", "xml"}).code == 2);
  CHECK(bss_cli({"paths", "--stdlib", "q_enumerator", "--depth", "3"}).code == 0);
  CHECK(bss_cli({"cantor", "--decompose", "2"}).code == 2);
  CHECK(bss_cli({"certify", "--stdlib", "sgn", "--input", "(0)"}).code == 2);
  auto help = bss_cli({"--help"});
  CHECK(help.code == 0);
  CHECK(has(help.out, "certify"));
}

TEST_CASE("stdlib listing and emission") {
  auto r = bss_cli({"stdlib"});
  CHECK(has(r.out, "algebraic_semidecider (arity 1)"));
  r = bss_cli({"stdlib", "--emit", "sgn"});
  CHECK(r.out.rfind("PROGRAM sgn", 0) == 0);
  std::ifstream f(std::string(BSS_STDLIB_DIR) + "/sgn.bss");
  std::stringstream ss;
  ss << f.rdbuf();
  CHECK(r.out == ss.str());
}
