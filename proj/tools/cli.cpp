#include "cli.hpp"

#include "bss/errors.hpp"
#include "bss/machine/cantor.hpp"
#include "bss/machine/interpreter.hpp"
#include "bss/machine/parser.hpp"
#include "bss/machine/trace_io.hpp"
#include "bss/stdlib/stdlib.hpp"
#include "bss/symbolic/certificate.hpp"
#include "bss/symbolic/paths.hpp"
#include "bss/symbolic/serialize.hpp"
#include "bss/symbolic/shadow.hpp"
#include "bss/witness/cantor_ring.hpp"
#include "bss/witness/counterexample.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <sstream>

namespace bss {

namespace {

constexpr int kOk = 0;
constexpr int kFalsified = 1;
constexpr int kUsage = 2;

class UsageError : public Error {
public:
  using Error::Error;
};

struct Options {
  std::string stdlib_name;
  std::vector<std::string> params;
  std::string program_path;
  std::string input = "()";
  std::string oracle = "empty";
  bool generic_yes = false;
  std::size_t budget = 100000;
  std::size_t depth = 30;
  std::size_t samples = 50;
  std::uint64_t seed = 1;
  std::optional<std::size_t> arity;
  std::string format = "text";
  std::vector<std::string> fields;
  bool trace = false;
  bool generic = false;
  std::string x1 = "2";
  std::string decompose;
  std::string member;
  std::size_t digits = 1000;
  std::string emit;
};

std::string read_file(const std::string &path) {
  std::ifstream in(path);
  if (!in)
    throw UsageError("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

FieldRegistry make_registry(const Options &o) {
  FieldRegistry reg;
  for (const auto &spec : o.fields)
    reg.add_spec(spec);
  return reg;
}

Program load_program(const Options &o, const FieldRegistry &reg) {
  if (!o.stdlib_name.empty() == !o.program_path.empty())
    throw UsageError("give exactly one of --stdlib and --program");
  if (!o.program_path.empty())
    return parse_program(read_file(o.program_path), reg);
  std::vector<Rational> params;
  for (const auto &p : o.params)
    params.push_back(parse_rational(p));
  return stdlib_program(o.stdlib_name, params);
}

Oracle parse_oracle(const std::string &spec, const FieldRegistry &reg, bool generic_yes) {
  Oracle o;
  if (spec == "rationals")
    o = Oracle::rationals();
  else if (spec == "algebraic")
    o = Oracle::algebraic();
  else if (spec == "cantor")
    o = Oracle::cantor();
  else if (spec == "empty")
    o = Oracle::empty();
  else if (spec.rfind("deg=", 0) == 0)
    o = Oracle::degree_eq(std::stoul(spec.substr(4)));
  else if (spec.rfind("degle=", 0) == 0)
    o = Oracle::degree_leq(std::stoul(spec.substr(6)));
  else if (spec.rfind("finite:", 0) == 0) {
    std::vector<Tuple> set;
    std::istringstream in(read_file(spec.substr(7)));
    std::string line;
    while (std::getline(in, line)) {
      if (line.find_first_not_of(" \t\r") == std::string::npos || line[0] == '#')
        continue;
      set.push_back(parse_tuple(line, reg));
    }
    o = Oracle::finite(std::move(set));
  } else {
    throw UsageError("unknown oracle '" + spec + "'");
  }
  o.generic_policy = generic_yes;
  return o;
}

void failure_record(std::ostream &err, const std::string &command, const nlohmann::json &detail) {
  err << nlohmann::json{{"failure", command}, {"detail", detail}}.dump() << "\n";
}

std::string tuple_text(const std::vector<RationalFunction> &fs) {
  std::string s = "(";
  for (std::size_t i = 0; i < fs.size(); ++i)
    s += (i ? ", " : "") + to_string(fs[i]);
  return s + ")";
}

int cmd_run(const Options &o, std::ostream &out) {
  auto reg = make_registry(o);
  Program p = load_program(o, reg);
  Oracle oracle = parse_oracle(o.oracle, reg, o.generic_yes);
  auto r = run_concrete(p, parse_tuple(o.input, reg), oracle, {o.budget, true});
  if (o.format == "json")
    out << run_to_json(p, r).dump(2) << "\n";
  else
    out << (o.trace ? format_trace(p, r) : "") << format_result(r) << "\n";
  return kOk;
}

int cmd_shadow(const Options &o, std::ostream &out, std::ostream &err) {
  auto reg = make_registry(o);
  Program p = load_program(o, reg);
  Oracle oracle = parse_oracle(o.oracle, reg, o.generic_yes);
  auto t = shadow_trace(p, parse_tuple(o.input, reg), oracle, o.budget,
                        o.generic ? OraclePolicy::Generic : OraclePolicy::Concrete);
  auto fb = field_boundary_check(p, t);
  if (o.format == "json") {
    auto j = shadow_to_json(t, fb);
    if (t.status == RunStatus::Halted) {
      j["f_set"] = nlohmann::json::array();
      for (const auto &f : extract_f(t))
        j["f_set"].push_back(to_json(f));
    }
    out << j.dump(2) << "\n";
  } else {
    out << format_shadow(p, t);
    if (t.status == RunStatus::Halted)
      out << "F = " << tuple_text(extract_f(t)) << "\n";
    out << "field boundary " << (fb.ok ? "ok" : "VIOLATED") << " (" << fb.values_checked
        << " values)\n";
  }
  if (!fb.ok) {
    failure_record(err, "shadow", fb.problems);
    return kFalsified;
  }
  return kOk;
}

int cmd_paths(const Options &o, std::ostream &out) {
  auto reg = make_registry(o);
  Program p = load_program(o, reg);
  Oracle oracle = parse_oracle(o.oracle, reg, o.generic_yes);
  std::size_t arity = o.arity ? *o.arity : p.arity.value_or(0);
  if (!p.arity && !o.arity)
    throw UsageError("program has variable arity; pass --arity");
  ExploreOptions opts{o.depth, o.budget};
  opts.generic_oracle = o.generic;
  auto tree = explore_paths(p, arity, oracle, opts);
  if (o.format == "json") {
    out << tree_to_json(tree).dump(2) << "\n";
  } else {
    out << format_tree(tree);
    out << tree.leaves.size() << " leaves, " << tree.nodes.size() << " nodes\n";
  }
  return kOk;
}

int cmd_certify(const Options &o, std::ostream &out, std::ostream &err) {
  auto reg = make_registry(o);
  Program p = load_program(o, reg);
  Oracle oracle = parse_oracle(o.oracle, reg, o.generic_yes);
  auto t = shadow_trace(p, parse_tuple(o.input, reg), oracle, o.budget);
  if (t.status != RunStatus::Halted)
    throw UsageError("the run at the center did not halt (" + to_string(t.status) + ")");
  auto fs = extract_f(t);
  EpsilonCertificate cert;
  try {
    cert = epsilon_certificate(fs, t.input);
  } catch (const CertificateFailure &e) {
    failure_record(err, "certify", e.what());
    return kFalsified;
  }
  bool checked = check_certificate(cert);
  auto report = verify_neighborhood(p, oracle, t, cert, o.samples, o.seed);
  if (o.format == "json") {
    out << nlohmann::json{{"certificate", certificate_to_json(cert)},
                          {"certificate_checked", checked},
                          {"neighborhood", neighborhood_to_json(report)}}
               .dump(2)
        << "\n";
  } else {
    out << "F = " << tuple_text(fs) << "\n" << format_certificate(cert);
    out << report.passed << "/" << report.samples.size() << " samples pass\n";
    for (const auto &s : report.samples)
      if (!s.pass())
        out << "  FAIL " << to_string(s.point) << ": " << s.detail << "\n";
  }
  if (!checked || !report.ok()) {
    failure_record(err, "certify", neighborhood_to_json(report));
    return kFalsified;
  }
  return kOk;
}

int cmd_witness(const Options &o, std::ostream &out, std::ostream &err) {
  auto reg = make_registry(o);
  Program p = load_program(o, reg);
  Oracle oracle = parse_oracle(o.oracle, reg, o.generic_yes);
  auto r = build_counterexample(p, oracle, parse_rational(o.x1), parse_tuple(o.input, reg), o.budget);
  auto j = counterexample_to_json(r);
  if (o.format == "json")
    out << j.dump(2) << "\n";
  else
    out << format_counterexample(r);
  bool invariant_ok = !r.x2 || r.x2_degree == r.m;
  if (r.verdict == Verdict::NotConfirmed || !invariant_ok) {
    failure_record(err, "witness", j);
    return kFalsified;
  }
  return kOk;
}

int cmd_cantor(const Options &o, std::ostream &out, std::ostream &err) {
  if (o.decompose.empty() == o.member.empty())
    throw UsageError("give exactly one of --decompose and --member");
  if (!o.member.empty()) {
    Rational x = parse_rational(o.member);
    bool in = cantor_membership(x);
    if (o.format == "json")
      out << nlohmann::json{{"x", to_string(x)}, {"member", in}}.dump(2) << "\n";
    else
      out << to_string(x) << (in ? " is" : " is not") << " in the Cantor set\n";
    return kOk;
  }
  Rational x = parse_rational(o.decompose);
  auto p = cantor_decompose(x, o.digits);
  auto j = cantor_pair_to_json(x, p);
  bool ok = j["exact"].get<bool>() && cantor_membership(p.c1) && cantor_membership(p.c2);
  if (o.format == "json") {
    out << j.dump(2) << "\n";
  } else {
    out << "x  = " << to_string(x) << " = " << p.x_digits << " (base 3)\n";
    out << "c1 = " << to_string(p.c1) << " = " << p.c1_digits << "\n";
    out << "c2 = " << to_string(p.c2) << " = " << p.c2_digits << "\n";
    out << "check c1 + c2/2 = " << to_string(Rational(p.c1 + p.c2 / 2)) << (ok ? " exact" : " MISMATCH")
        << "\n";
  }
  if (!ok) {
    failure_record(err, "cantor", j);
    return kFalsified;
  }
  return kOk;
}

int cmd_stdlib(const Options &o, std::ostream &out) {
  if (!o.emit.empty()) {
    std::vector<Rational> params;
    for (const auto &p : o.params)
      params.push_back(parse_rational(p));
    out << stdlib_source(o.emit, params);
    return kOk;
  }
  if (o.format == "json") {
    auto j = nlohmann::json::array();
    for (const auto &e : stdlib_entries())
      j.push_back({{"name", e.name}, {"arity", e.arity}, {"params", e.param_names},
                   {"summary", e.summary}});
    out << j.dump(2) << "\n";
    return kOk;
  }
  for (const auto &e : stdlib_entries()) {
    out << e.name << " (arity " << e.arity;
    for (std::size_t i = 0; i < e.param_names.size(); ++i)
      out << ", " << e.param_names[i] << "=" << to_string(e.default_params[i]);
    out << "): " << e.summary << "\n";
  }
  return kOk;
}

void program_options(CLI::App *c, Options &o) {
  c->add_option("--stdlib", o.stdlib_name, "library program name");
  c->add_option("--param", o.params, "library program parameter (repeatable)");
  c->add_option("--program", o.program_path, "path to a DSL program");
  c->add_option("--input", o.input, "input tuple, e.g. \"(1/2, sqrt2:(0,1))\"");
  c->add_option("--oracle", o.oracle, "rationals|algebraic|deg=d|degle=d|cantor|finite:<path>|empty");
  c->add_flag("--generic-yes", o.generic_yes, "generic answer for symbolic oracle queries is yes");
  c->add_option("--budget", o.budget, "step budget")->check(CLI::PositiveNumber);
  c->add_option("--field", o.fields, "register a field: [name=]minpoly;lo;hi (repeatable)");
  c->add_option("--format", o.format, "output format")->check(CLI::IsMember({"text", "json"}));
}

} // namespace

int dispatch(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
  CLI::App app{"BSS machine interpreter and symbolic analyzer", "bss"};
  app.require_subcommand(1);
  Options o;

  auto *run = app.add_subcommand("run", "run a program on an input");
  program_options(run, o);
  run->add_flag("--trace", o.trace, "print every step");

  auto *shadow = app.add_subcommand("shadow", "shadow trace with rational functions");
  program_options(shadow, o);
  shadow->add_flag("--generic", o.generic, "answer nonconstant oracle queries generically");

  auto *paths = app.add_subcommand("paths", "enumerate computation paths symbolically");
  program_options(paths, o);
  paths->add_option("--depth", o.depth, "forks along one path")->check(CLI::PositiveNumber);
  paths->add_option("--arity", o.arity, "input arity for variable-arity programs");
  paths->add_flag("--generic", o.generic, "do not split on nonconstant oracle queries");

  auto *certify = app.add_subcommand("certify", "certify a sign-invariant neighborhood");
  program_options(certify, o);
  certify->add_option("--samples", o.samples, "sample points")->check(CLI::PositiveNumber);
  certify->add_option("--seed", o.seed, "sampling seed");

  auto *witness = app.add_subcommand("witness", "build the root-placement counterexample");
  program_options(witness, o);
  witness->add_option("--x1", o.x1, "first coordinate (rational, > 0)");

  auto *cantor = app.add_subcommand("cantor", "Cantor set membership and decomposition");
  cantor->add_option("--decompose", o.decompose, "write x as c1 + c2/2");
  cantor->add_option("--member", o.member, "membership test");
  cantor->add_option("--digits", o.digits, "ternary digit budget")->check(CLI::PositiveNumber);
  cantor->add_option("--format", o.format, "output format")->check(CLI::IsMember({"text", "json"}));

  auto *lib = app.add_subcommand("stdlib", "list library programs or print one");
  lib->add_option("--emit", o.emit, "print the DSL source of an entry");
  lib->add_option("--param", o.params, "parameter (repeatable)");
  lib->add_option("--format", o.format, "output format")->check(CLI::IsMember({"text", "json"}));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError &e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*run)
      return cmd_run(o, out);
    if (*shadow)
      return cmd_shadow(o, out, err);
    if (*paths)
      return cmd_paths(o, out);
    if (*certify)
      return cmd_certify(o, out, err);
    if (*witness)
      return cmd_witness(o, out, err);
    if (*cantor)
      return cmd_cantor(o, out, err);
    return cmd_stdlib(o, out);
  } catch (const UsageError &e) {
    err << "bss: " << e.what() << "\n";
    return kUsage;
  } catch (const ParseError &e) {
    err << "bss: " << e.what() << "\n";
    return kUsage;
  } catch (const PreconditionError &e) {
    err << "bss: " << e.what() << "\n";
    return kUsage;
  } catch (const Error &e) {
    err << "bss: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument &e) {
    err << "bss: bad number: " << e.what() << "\n";
    return kUsage;
  }
}

} // namespace bss
