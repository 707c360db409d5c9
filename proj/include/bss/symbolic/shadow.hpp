#pragma once

#include "bss/exact/rational_function.hpp"
#include "bss/machine/interpreter.hpp"

#include <map>
#include <string>
#include <vector>

namespace bss {

/// How oracle queries are answered during a shadow run.
enum class OraclePolicy {
  Concrete, // ask the oracle on the concrete tuple
  Generic,  // nonconstant tuples get oracle.generic_policy; constant ones are asked
};

/// A concrete value together with the rational function of the inputs that
/// produced it.
struct ShadowValue {
  AlgebraicNumber value;
  RationalFunction f;
};

struct ShadowWrite {
  long cell = 0;
  AlgebraicNumber value;
  RationalFunction f;
};

struct ShadowStep {
  std::size_t pc = 0;
  std::vector<ShadowWrite> writes; // cells changed by this step
};

struct BranchRecord {
  std::size_t pc = 0;
  RationalFunction f;
  int sign = 0;
};

struct OracleRecord {
  std::size_t pc = 0;
  std::vector<RationalFunction> query;
  Tuple values;
  bool answer = false;
  bool was_constant = false;
};

/// Divisions are logged too: a certificate must keep every divisor away
/// from zero, or a nearby input could fault.
struct DivisionRecord {
  std::size_t pc = 0;
  RationalFunction divisor;
};

struct SymbolicTrace {
  std::string program;
  std::size_t arity = 0; // number of indeterminates Y1..Yk
  Tuple input;
  std::vector<ShadowStep> steps;
  std::vector<BranchRecord> branches;
  std::vector<OracleRecord> oracles;
  std::vector<DivisionRecord> divisions;
  std::vector<Decision> history;
  RunStatus status = RunStatus::Halted;
  std::optional<FaultKind> fault;
  std::size_t step_count = 0;
  std::vector<RationalFunction> output_functions;
  Tuple output;
};

/// Runs concretely while carrying each cell's canonical rational function in
/// the input indeterminates. Branches and answers come from the concrete run.
SymbolicTrace shadow_trace(const Program &p, const Tuple &input, const Oracle &oracle,
                           std::size_t budget, OraclePolicy policy = OraclePolicy::Concrete);

/// Nonconstant functions branched on, divided by, or sent to the oracle,
/// deduplicated. Throws PreconditionError unless the trace halted.
std::vector<RationalFunction> extract_f(const SymbolicTrace &t);

struct FieldBoundaryReport {
  bool ok = true;
  std::size_t values_checked = 0;
  bool all_rational = true; // every concrete value has degree 1 over Q
  std::vector<std::string> problems;
};

/// Every traced function has coefficients in the parameters' field and
/// evaluates at the input to the concrete value written at that step.
FieldBoundaryReport field_boundary_check(const Program &p, const SymbolicTrace &t);

} // namespace bss
