#include "bss/machine/interpreter.hpp"

namespace bss {

std::string to_string(FaultKind k) {
  switch (k) {
  case FaultKind::DivisionByZero: return "division_by_zero";
  case FaultKind::BlankRead: return "blank_read";
  case FaultKind::OracleUnsupported: return "oracle_unsupported";
  case FaultKind::InvalidOutputLength: return "invalid_output_length";
  }
  return "?";
}

std::string to_string(RunStatus s) {
  switch (s) {
  case RunStatus::Halted: return "halted";
  case RunStatus::BudgetExhausted: return "budget_exhausted";
  case RunStatus::Fault: return "fault";
  }
  return "?";
}

OracleReply ConcreteDomain::ask(const Tuple &t) const {
  try {
    return oracle_query(*oracle, t) ? OracleReply::Yes : OracleReply::No;
  } catch (const OracleUnsupported &) {
    return OracleReply::Unsupported;
  }
}

std::optional<long> ConcreteDomain::as_count(const Value &v) const {
  auto q = v.as_rational();
  if (!q || !is_integer(*q) || !q->get_num().fits_slong_p())
    return std::nullopt;
  return q->get_num().get_si();
}

void check_common_field(const Program &p, const Tuple &input) {
  std::optional<AlgebraicNumber> witness;
  auto visit = [&](const AlgebraicNumber &a) {
    if (a.is_rational())
      return;
    if (!witness)
      witness = a;
    else
      common_field(*witness, a);
  };
  for (const auto &prm : p.params)
    visit(prm.value);
  for (const auto &x : input)
    visit(x);
}

RunResult run_concrete(const Program &p, const Tuple &input, const Oracle &oracle,
                       const RunOptions &opts) {
  check_common_field(p, input);
  ConcreteDomain dom{&oracle};
  auto state = initial_state(p, input, dom);
  RunResult r;
  r.status = RunStatus::BudgetExhausted;
  while (state.steps < opts.budget || state.pc >= p.size()) {
    auto ev = step(p, state, dom);
    if (ev.branch_sign)
      r.history.push_back({ev.pc, false, *ev.branch_sign});
    if (ev.oracle_answer)
      r.history.push_back({ev.pc, true, *ev.oracle_answer ? 1 : 0});
    if (opts.record_trace && (ev.kind != StepKind::Halted || ev.pc < p.size())) {
      TraceStep ts{state.steps, ev.pc, std::move(ev.writes), ev.branch_sign, std::nullopt};
      if (ev.oracle_answer)
        ts.oracle = std::make_pair(*ev.oracle_query, *ev.oracle_answer);
      r.trace.push_back(std::move(ts));
    }
    if (ev.kind == StepKind::Halted) {
      r.status = RunStatus::Halted;
      r.output = std::move(ev.output);
      break;
    }
    if (ev.kind == StepKind::Fault) {
      r.status = RunStatus::Fault;
      r.fault = ev.fault;
      break;
    }
  }
  r.steps = state.steps;
  return r;
}

} // namespace bss
