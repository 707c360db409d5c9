#pragma once

#include "bss/machine/engine.hpp"
#include "bss/machine/oracle.hpp"

#include <optional>
#include <string>
#include <vector>

namespace bss {

enum class RunStatus { Halted, BudgetExhausted, Fault };
std::string to_string(RunStatus s);

/// One sign or oracle decision taken during a run.
struct Decision {
  std::size_t pc = 0;
  bool oracle = false;
  int value = 0; // branch sign, or 1/0 for an oracle answer
  bool operator==(const Decision &) const = default;
};

struct TraceStep {
  std::size_t step = 0;
  std::size_t pc = 0;
  std::vector<std::pair<long, AlgebraicNumber>> writes;
  std::optional<int> branch;
  std::optional<std::pair<Tuple, bool>> oracle;
};

struct RunResult {
  RunStatus status = RunStatus::Halted;
  Tuple output; // only when halted
  std::size_t steps = 0;
  std::optional<FaultKind> fault;
  std::vector<Decision> history;
  std::vector<TraceStep> trace; // empty unless requested
};

struct RunOptions {
  std::size_t budget = 100000;
  bool record_trace = false;
};

/// Concrete domain: exact values in one number field.
struct ConcreteDomain {
  using Value = AlgebraicNumber;
  const Oracle *oracle;


  Value lift(const AlgebraicNumber &a) const { return a; }
  std::optional<int> sign(const Value &v) const { return sign_at(v); }
  std::optional<bool> is_zero(const Value &v) const { return v.is_zero(); }
  Value arith(const Value &a, const Value &b, ArithOp op) const { return field_arith(a, b, op); }
  OracleReply ask(const Tuple &t) const;
  std::optional<long> as_count(const Value &v) const;
};

/// Checks that params and input share one number field (rationals fit anywhere).
void check_common_field(const Program &p, const Tuple &input);

RunResult run_concrete(const Program &p, const Tuple &input, const Oracle &oracle,
                       const RunOptions &opts = {});

} // namespace bss
