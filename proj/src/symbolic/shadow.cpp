#include "bss/symbolic/shadow.hpp"

#include "bss/machine/engine.hpp"

namespace bss {

namespace {

struct ShadowDomain {
  using Value = ShadowValue;
  std::size_t arity;
  const Oracle *oracle;
  OraclePolicy policy;
  bool last_constant = true;

  Value lift(const AlgebraicNumber &a) const { return {a, RationalFunction::constant(arity, a)}; }
  std::optional<int> sign(const Value &v) const { return sign_at(v.value); }
  std::optional<bool> is_zero(const Value &v) const { return v.value.is_zero(); }
  Value arith(const Value &a, const Value &b, ArithOp op) const {
    return {field_arith(a.value, b.value, op), rf_arith(a.f, b.f, op)};
  }
  OracleReply ask(const std::vector<Value> &t) {
    last_constant = true;
    Tuple values;
    for (const auto &v : t) {
      values.push_back(v.value);
      last_constant = last_constant && v.f.is_constant();
    }
    if (policy == OraclePolicy::Generic && !last_constant)
      return oracle->generic_policy ? OracleReply::Yes : OracleReply::No;
    try {
      return oracle_query(*oracle, values) ? OracleReply::Yes : OracleReply::No;
    } catch (const OracleUnsupported &) {
      return OracleReply::Unsupported;
    }
  }
  std::optional<long> as_count(const Value &v) const {
    auto q = v.value.as_rational();
    if (!q || !is_integer(*q) || !q->get_num().fits_slong_p())
      return std::nullopt;
    return q->get_num().get_si();
  }
};

} // namespace

SymbolicTrace shadow_trace(const Program &p, const Tuple &input, const Oracle &oracle,
                           std::size_t budget, OraclePolicy policy) {
  check_common_field(p, input);
  SymbolicTrace t;
  t.program = p.name;
  t.arity = input.size();
  t.input = input;
  ShadowDomain dom{t.arity, &oracle, policy};
  std::vector<ShadowValue> in;
  for (std::size_t i = 0; i < input.size(); ++i)
    in.push_back({input[i], RationalFunction::variable(t.arity, i)});
  auto state = initial_state(p, in, dom);
  t.status = RunStatus::BudgetExhausted;
  while (state.steps < budget || state.pc >= p.size()) {
    std::size_t pc = state.pc;
    if (pc < p.size())
      if (auto *a = std::get_if<ArithInstr>(&p.instructions[pc]); a && a->op == ArithOp::Div) {
        auto it = state.cells.find(state.head + static_cast<long>(a->rhs));
        if (it != state.cells.end() && !it->second.value.is_zero())
          t.divisions.push_back({pc, it->second.f});
      }
    auto ev = step(p, state, dom);
    if (pc < p.size()) {
      ShadowStep st{pc, {}};
      for (auto &[cell, v] : ev.writes)
        st.writes.push_back({cell, v.value, v.f});
      t.steps.push_back(std::move(st));
    }
    if (ev.branch_sign) {
      const auto &b = std::get<BranchInstr>(p.instructions[pc]);
      t.branches.push_back({pc, state.cells.at(state.head + static_cast<long>(b.src)).f, *ev.branch_sign});
      t.history.push_back({pc, false, *ev.branch_sign});
    }
    if (ev.oracle_answer) {
      OracleRecord rec{pc, {}, {}, *ev.oracle_answer, dom.last_constant};
      for (const auto &v : *ev.oracle_query) {
        rec.query.push_back(v.f);
        rec.values.push_back(v.value);
      }
      t.oracles.push_back(std::move(rec));
      t.history.push_back({pc, true, *ev.oracle_answer ? 1 : 0});
    }
    if (ev.kind == StepKind::Halted) {
      t.status = RunStatus::Halted;
      for (const auto &v : ev.output) {
        t.output_functions.push_back(v.f);
        t.output.push_back(v.value);
      }
      break;
    }
    if (ev.kind == StepKind::Fault) {
      t.status = RunStatus::Fault;
      t.fault = ev.fault;
      break;
    }
  }
  t.step_count = state.steps;
  return t;
}

std::vector<RationalFunction> extract_f(const SymbolicTrace &t) {
  if (t.status != RunStatus::Halted)
    throw PreconditionError("extract_f needs a halted trace");
  std::vector<RationalFunction> out;
  auto add = [&](const RationalFunction &f) {
    if (f.is_constant())
      return;
    for (const auto &g : out)
      if (g == f)
        return;
    out.push_back(f);
  };
  for (const auto &b : t.branches)
    add(b.f);
  for (const auto &d : t.divisions)
    add(d.divisor);
  for (const auto &o : t.oracles)
    for (const auto &f : o.query)
      add(f);
  return out;
}

namespace {

std::optional<FieldPtr> params_field(const Program &p) {
  for (const auto &prm : p.params)
    if (!prm.value.is_rational())
      return prm.value.field();
  return std::nullopt;
}

bool coefficient_ok(const AlgebraicNumber &c, const std::optional<FieldPtr> &field) {
  if (c.is_rational())
    return true;
  return field && (c.field() == *field || c.field()->same_as(**field));
}

} // namespace

FieldBoundaryReport field_boundary_check(const Program &p, const SymbolicTrace &t) {
  FieldBoundaryReport r;
  auto field = params_field(p);
  auto problem = [&](std::size_t step, const std::string &what) {
    r.ok = false;
    if (r.problems.size() < 20)
      r.problems.push_back("step " + std::to_string(step) + ": " + what);
  };
  for (std::size_t i = 0; i < t.steps.size(); ++i) {
    for (const auto &w : t.steps[i].writes) {
      ++r.values_checked;
      if (!w.value.is_rational())
        r.all_rational = false;
      for (const auto *poly : {&w.f.numerator(), &w.f.denominator()})
        for (const auto &[e, c] : poly->terms())
          if (!coefficient_ok(c, field))
            problem(i + 1, "coefficient " + to_string(c) + " outside the parameter field");
      try {
        if (!(rf_eval(w.f, t.input) == w.value))
          problem(i + 1, "c" + std::to_string(w.cell) + ": " + to_string(w.f) + " does not evaluate to " +
                             to_string(w.value));
      } catch (const Error &e) {
        problem(i + 1, "c" + std::to_string(w.cell) + ": " + e.what());
      }
    }
  }
  return r;
}

} // namespace bss
