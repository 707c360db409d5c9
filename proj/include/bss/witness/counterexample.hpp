#pragma once

#include "bss/exact/rational_function.hpp"
#include "bss/machine/interpreter.hpp"
#include "bss/machine/oracle.hpp"
#include "bss/machine/program.hpp"

#include <json.hpp>
#include <optional>
#include <string>
#include <vector>

namespace bss {

/// The arity-2 dependence search: halts iff some nonzero q in Q[Y1,Y2]
/// vanishes at the input.
Program dependence_program();

/// Largest degree of variable `var` over all numerators and denominators.
unsigned max_var_degree(const std::vector<RationalFunction> &fs, std::size_t var);

/// Smallest prime strictly greater than n.
unsigned long choose_prime_m(unsigned long n);

struct RootPlacement {
  Rational b;
  AlgebraicNumber x2; // b + x1^(1/m)
  RatInterval root_enclosure;
};

/// Picks a dyadic b with |b + x1^(1/m) - center| < eps, verified by exact
/// sign checks. Throws PreconditionError when x1 <= 0, eps <= 0, or x1 is a
/// perfect m-th power, and CertificateFailure if bisection does not converge.
RootPlacement place_root(const Rational &x1, unsigned long m, const Rational &center,
                         const Rational &eps);

enum class Verdict { CounterexampleConfirmed, PipelineInapplicable, NotConfirmed };

struct CounterexampleReport {
  std::vector<RationalFunction> f_set;
  unsigned n = 0;
  unsigned long m = 0;
  Rational epsilon;
  Rational b;
  Rational x1;
  std::optional<AlgebraicNumber> x2;
  bool x1_in_box = false;
  bool x2_in_box = false;
  std::size_t x2_degree = 0;
  bool path_equal = false;
  std::optional<AlgebraicNumber> machine_output;
  int ground_truth = 1;
  std::string dependence_witness; // a nonzero polynomial vanishing at (x1, x2)
  std::string oracle_check;       // how oracle answers on the new point relate to the generic ones
  Verdict verdict = Verdict::PipelineInapplicable;
  std::string reason;
};

/// Runs M generically at the probe, certifies a box, places x2 = b + x1^(1/m)
/// inside it and runs M concretely on (x1, x2). M must have arity 2 and the
/// probe must be rational.
CounterexampleReport build_counterexample(const Program &m, const Oracle &oracle,
                                          const Rational &x1, const Tuple &probe,
                                          std::size_t budget);

std::string to_string(Verdict v);
nlohmann::json counterexample_to_json(const CounterexampleReport &r);
std::string format_counterexample(const CounterexampleReport &r);

} // namespace bss
