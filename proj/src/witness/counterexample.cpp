#include "bss/witness/counterexample.hpp"

#include "bss/errors.hpp"
#include "bss/machine/trace_io.hpp"
#include "bss/stdlib/stdlib.hpp"
#include "bss/symbolic/certificate.hpp"
#include "bss/symbolic/serialize.hpp"
#include "bss/symbolic/shadow.hpp"

#include <sstream>

namespace bss {

Program dependence_program() { return stdlib_program("dependence"); }

unsigned max_var_degree(const std::vector<RationalFunction> &fs, std::size_t var) {
  unsigned n = 0;
  for (const auto &f : fs) {
    if (var >= f.arity())
      continue;
    n = std::max({n, f.numerator().degree_in(var), f.denominator().degree_in(var)});
  }
  return n;
}

unsigned long choose_prime_m(unsigned long n) {
  unsigned long m = n + 1;
  while (!is_prime(m))
    ++m;
  return m;
}

RootPlacement place_root(const Rational &x1, unsigned long m, const Rational &center,
                         const Rational &eps) {
  if (x1 <= 0)
    throw PreconditionError("place_root needs x1 > 0");
  if (eps <= 0)
    throw PreconditionError("place_root needs eps > 0");
  if (m < 2 || exact_root(x1, m))
    throw PreconditionError(to_string(x1) + " is a perfect " + std::to_string(m) + "-th power");
  Rational lo(0), hi = x1 > 1 ? x1 : Rational(1);
  for (int i = 0; hi - lo >= eps / 2; ++i) {
    if (i > 100000)
      throw CertificateFailure("bisection for the root did not converge");
    Rational mid = (lo + hi) / 2;
    mid.canonicalize();
    if (pow(mid, m) < x1)
      lo = mid;
    else
      hi = mid;
  }
  Rational mid = (lo + hi) / 2;
  unsigned long bits = 0;
  while (Rational(1, 1) / pow(Rational(2), bits) > eps / 4)
    ++bits;
  RootPlacement r;
  r.b = round_dyadic(center - mid, bits);
  r.root_enclosure = RatInterval(lo, hi);
  auto [field, root] = nth_root_field(x1, m);
  (void)field;
  r.x2 = AlgebraicNumber(r.b) + root;
  if (sign_at(r.x2 - AlgebraicNumber(center - eps)) != 1 ||
      sign_at(AlgebraicNumber(center + eps) - r.x2) != 1)
    throw CertificateFailure("placed root left the box");
  return r;
}

std::string to_string(Verdict v) {
  switch (v) {
  case Verdict::CounterexampleConfirmed:
    return "counterexample_confirmed";
  case Verdict::PipelineInapplicable:
    return "pipeline_inapplicable";
  case Verdict::NotConfirmed:
    return "not_confirmed";
  }
  return "?";
}

namespace {

AlgebraicNumber horner(const UniPoly &p, const AlgebraicNumber &x) {
  AlgebraicNumber acc(0);
  for (long k = p.degree(); k >= 0; --k)
    acc = acc * x + AlgebraicNumber(p.coeff(static_cast<std::size_t>(k)));
  return acc;
}

std::string describe_oracle(const Oracle &oracle, const SymbolicTrace &t, const Tuple &point) {
  std::vector<std::size_t> degrees;
  std::size_t symbolic = 0;
  bool in_set = false;
  for (const auto &rec : t.oracles) {
    if (rec.was_constant)
      continue;
    ++symbolic;
    Tuple values;
    try {
      for (const auto &f : rec.query)
        values.push_back(rf_eval(f, point));
    } catch (const PoleError &) {
      return "query has a pole at the new point";
    }
    for (const auto &v : values)
      degrees.push_back(degree_over_q(v));
    if (oracle.kind == Oracle::Kind::FiniteSet)
      in_set = in_set || oracle_query(oracle, values);
  }
  if (symbolic == 0)
    return "no symbolic oracle queries";
  std::ostringstream os;
  os << "query degrees [";
  for (std::size_t i = 0; i < degrees.size(); ++i)
    os << (i ? ", " : "") << degrees[i];
  os << "]";
  switch (oracle.kind) {
  case Oracle::Kind::Rationals:
    os << " against degree bound 1";
    break;
  case Oracle::Kind::DegreeLeq:
  case Oracle::Kind::DegreeEq:
    os << " against degree bound " << oracle.degree;
    break;
  case Oracle::Kind::FiniteSet:
    os << "; finite set, membership checked directly: " << (in_set ? "member" : "non-member");
    break;
  case Oracle::Kind::Algebraic:
    os << "; oracle is not degree-bounded";
    break;
  case Oracle::Kind::Cantor:
  case Oracle::Kind::Empty:
    os << "; oracle is " << to_string(oracle);
    break;
  }
  return os.str();
}

} // namespace

CounterexampleReport build_counterexample(const Program &machine, const Oracle &oracle,
                                          const Rational &x1, const Tuple &probe,
                                          std::size_t budget) {
  if (machine.arity != std::optional<std::size_t>(2) || probe.size() != 2)
    throw PreconditionError("build_counterexample needs an arity-2 program and a 2-tuple probe");
  auto y2 = probe[1].as_rational();
  if (!probe[0].is_rational() || !y2)
    throw PreconditionError("the probe must be rational");
  CounterexampleReport r;
  r.x1 = x1;
  auto t = shadow_trace(machine, probe, oracle, budget, OraclePolicy::Generic);
  if (t.status != RunStatus::Halted) {
    r.reason = "probe run " + to_string(t.status);
    return r;
  }
  for (const auto &b : t.branches)
    if (b.sign == 0 && !b.f.is_constant()) {
      r.reason = "equality branch on " + to_string(b.f) + " at pc " + std::to_string(b.pc);
      return r;
    }
  r.f_set = extract_f(t);
  r.n = max_var_degree(r.f_set, 1);
  r.m = choose_prime_m(r.n);
  EpsilonCertificate cert;
  try {
    cert = epsilon_certificate(r.f_set, probe);
  } catch (const CertificateFailure &e) {
    r.reason = e.what();
    return r;
  }
  r.epsilon = cert.epsilon;
  auto placed = place_root(x1, r.m, *y2, cert.epsilon);
  r.b = placed.b;
  r.x2 = placed.x2;
  r.x1_in_box = abs(x1 - *probe[0].as_rational()) < cert.epsilon;
  r.x2_in_box = true; // place_root verified it
  r.x2_degree = degree_over_q(*r.x2);

  Tuple point{AlgebraicNumber(x1), *r.x2};
  r.oracle_check = describe_oracle(oracle, t, point);
  RunResult run;
  try {
    run = run_concrete(machine, point, oracle, {budget, false});
  } catch (const OracleUnsupported &e) {
    r.reason = std::string("oracle unsupported on the extension field: ") + e.what();
    return r;
  }
  if (run.status == RunStatus::Fault && run.fault == FaultKind::OracleUnsupported) {
    r.reason = "oracle unsupported on the extension field";
    return r;
  }
  r.path_equal = run.status == RunStatus::Halted && run.history == t.history;
  if (run.status == RunStatus::Halted && run.output.size() == 1)
    r.machine_output = run.output[0];

  UniPoly mp = minimal_polynomial(*r.x2);
  if (!horner(mp, *r.x2).is_zero())
    throw Error("minimal polynomial does not vanish");
  r.dependence_witness = to_string(mp, "Y2");
  r.ground_truth = 1;

  if (!r.path_equal)
    r.reason = "concrete run left the probe's path (" + to_string(run.status) + ")";
  else if (!r.machine_output)
    r.reason = "output is not a single value";
  else if (*r.machine_output == AlgebraicNumber(r.ground_truth))
    r.reason = "machine output agrees with the dependence predicate";
  else
    r.verdict = Verdict::CounterexampleConfirmed;
  if (r.verdict != Verdict::CounterexampleConfirmed)
    r.verdict = Verdict::NotConfirmed;
  return r;
}

nlohmann::json counterexample_to_json(const CounterexampleReport &r) {
  nlohmann::json j;
  j["verdict"] = to_string(r.verdict);
  j["reason"] = r.reason;
  j["f_set"] = nlohmann::json::array();
  for (const auto &f : r.f_set)
    j["f_set"].push_back(to_json(f));
  j["n"] = r.n;
  j["m"] = r.m;
  j["epsilon"] = to_string(r.epsilon);
  j["b"] = to_string(r.b);
  j["x1"] = to_string(r.x1);
  j["x2"] = r.x2 ? nlohmann::json(to_string(*r.x2)) : nlohmann::json();
  j["x2_minpoly"] = r.x2 ? nlohmann::json(to_string(r.x2->field()->min_poly())) : nlohmann::json();
  j["x2_degree"] = r.x2_degree;
  j["x1_in_box"] = r.x1_in_box;
  j["x2_in_box"] = r.x2_in_box;
  j["path_equal"] = r.path_equal;
  j["machine_output"] = r.machine_output ? nlohmann::json(to_string(*r.machine_output)) : nlohmann::json();
  j["ground_truth"] = r.ground_truth;
  j["dependence_witness"] = r.dependence_witness;
  j["oracle_check"] = r.oracle_check;
  return j;
}

std::string format_counterexample(const CounterexampleReport &r) {
  std::ostringstream os;
  os << "verdict " << to_string(r.verdict);
  if (!r.reason.empty())
    os << " (" << r.reason << ")";
  os << "\nF = {";
  for (std::size_t i = 0; i < r.f_set.size(); ++i)
    os << (i ? ", " : "") << to_string(r.f_set[i]);
  os << "}\nn = " << r.n << "  m = " << r.m << "  epsilon = " << to_string(r.epsilon) << "\n";
  if (r.x2) {
    os << "x1 = " << to_string(r.x1) << (r.x1_in_box ? " (in box)" : " (outside box)") << "\n";
    os << "x2 = " << to_string(r.b) << " + " << to_string(r.x1) << "^(1/" << r.m
       << ")  degree " << r.x2_degree << "\n";
    os << "path_equal = " << (r.path_equal ? "true" : "false") << "  machine_output = "
       << (r.machine_output ? to_string(*r.machine_output) : "-") << "  ground_truth = "
       << r.ground_truth << "\n";
    os << "vanishing polynomial: " << r.dependence_witness << "\n";
    os << "oracle: " << r.oracle_check << "\n";
  }
  return os.str();
}

} // namespace bss
