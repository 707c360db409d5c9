#pragma once

// The single small-step semantics shared by concrete, shadow and symbolic
// execution. A Domain supplies the value type and the three places where
// values are inspected: signs, zero tests and oracle answers. When the
// domain cannot decide one of them the step returns Fork without changing
// the state, and the caller re-steps after recording an assumption.

#include "bss/errors.hpp"
#include "bss/machine/program.hpp"

#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace bss {

enum class FaultKind { DivisionByZero, BlankRead, OracleUnsupported, InvalidOutputLength };
std::string to_string(FaultKind k);

template <class V> struct MachineState {
  std::map<long, V> cells; // absolute position -> value
  long head = 0;
  std::size_t pc = 0;
  std::size_t steps = 0;
};

enum class OracleReply { Yes, No, Unknown, Unsupported };

enum class StepKind { Continue, Halted, Fault, Fork };

template <class V> struct StepEvent {
  StepKind kind = StepKind::Continue;
  std::size_t pc = 0;
  std::vector<std::pair<long, V>> writes;
  std::optional<int> branch_sign;
  std::optional<std::vector<V>> oracle_query;
  std::optional<bool> oracle_answer;
  std::vector<V> output;
  FaultKind fault = FaultKind::BlankRead;
  /// For a Fork: the value whose sign is unknown (BRANCH or DIV divisor), or
  /// the oracle tuple (in oracle_query) when fork_on_oracle is set.
  std::optional<V> fork_value;
  bool fork_on_oracle = false;
};

/// Places the input: c0..c(n-1) for fixed arity, or c0 = n and c1..cn for
/// ARITY VAR. Also applies the ZERO window.
template <class V, class D>
MachineState<V> initial_state(const Program &p, const std::vector<V> &input, D &dom) {
  MachineState<V> s;
  if (p.zero_window)
    for (long i = p.zero_window->first; i <= p.zero_window->second; ++i)
      s.cells.insert_or_assign(i, dom.lift(AlgebraicNumber(0)));
  long base = 0;
  if (p.arity) {
    if (input.size() != *p.arity)
      throw PreconditionError("program '" + p.name + "' expects " + std::to_string(*p.arity) +
                              " input(s), got " + std::to_string(input.size()));
  } else {
    s.cells.insert_or_assign(0, dom.lift(AlgebraicNumber(static_cast<long>(input.size()))));
    base = 1;
  }
  for (std::size_t i = 0; i < input.size(); ++i)
    s.cells.insert_or_assign(base + static_cast<long>(i), input[i]);
  return s;
}

template <class D>
StepEvent<typename D::Value> step(const Program &p, MachineState<typename D::Value> &s, D &dom) {
  using V = typename D::Value;
  StepEvent<V> ev;
  ev.pc = s.pc;
  if (s.pc >= p.size()) {
    ev.kind = StepKind::Halted;
    return ev;
  }
  auto fault = [&](FaultKind k) {
    ev.kind = StepKind::Fault;
    ev.fault = k;
    ++s.steps;
    return ev;
  };
  auto read = [&](std::size_t rel) -> const V * {
    auto it = s.cells.find(s.head + static_cast<long>(rel));
    return it == s.cells.end() ? nullptr : &it->second;
  };
  auto write = [&](std::size_t rel, V v) {
    long at = s.head + static_cast<long>(rel);
    ev.writes.emplace_back(at, v);
    s.cells.insert_or_assign(at, std::move(v));
  };
  auto read_range = [&](std::size_t lo, std::size_t hi, std::vector<V> &out) {
    for (std::size_t i = lo; i <= hi; ++i) {
      const V *v = read(i);
      if (!v)
        return false;
      out.push_back(*v);
    }
    return true;
  };

  const Instruction &ins = p.instructions[s.pc];
  std::size_t next = s.pc + 1;

  if (auto *c = std::get_if<ConstInstr>(&ins)) {
    write(c->dst, dom.lift(c->param ? p.params[*c->param].value : AlgebraicNumber(*c->literal)));
  } else if (auto *c = std::get_if<CopyInstr>(&ins)) {
    const V *v = read(c->src);
    if (!v)
      return fault(FaultKind::BlankRead);
    write(c->dst, *v);
  } else if (auto *a = std::get_if<ArithInstr>(&ins)) {
    const V *x = read(a->lhs), *y = read(a->rhs);
    if (!x || !y)
      return fault(FaultKind::BlankRead);
    if (a->op == ArithOp::Div) {
      std::optional<bool> z = dom.is_zero(*y);
      if (!z) {
        ev.kind = StepKind::Fork;
        ev.fork_value = *y;
        return ev;
      }
      if (*z)
        return fault(FaultKind::DivisionByZero);
    }
    write(a->dst, dom.arith(*x, *y, a->op));
  } else if (auto *b = std::get_if<BranchInstr>(&ins)) {
    const V *v = read(b->src);
    if (!v)
      return fault(FaultKind::BlankRead);
    std::optional<int> sg = dom.sign(*v);
    if (!sg) {
      ev.kind = StepKind::Fork;
      ev.fork_value = *v;
      return ev;
    }
    ev.branch_sign = *sg;
    next = *sg < 0 ? b->neg.pc : *sg == 0 ? b->zero.pc : b->pos.pc;
  } else if (auto *j = std::get_if<JumpInstr>(&ins)) {
    next = j->target.pc;
  } else if (auto *sh = std::get_if<ShiftInstr>(&ins)) {
    s.head += sh->right ? 1 : -1;
  } else if (auto *o = std::get_if<OracleInstr>(&ins)) {
    std::vector<V> tuple;
    if (!read_range(o->lo, o->hi, tuple))
      return fault(FaultKind::BlankRead);
    OracleReply r = dom.ask(tuple);
    if (r == OracleReply::Unsupported)
      return fault(FaultKind::OracleUnsupported);
    ev.oracle_query = std::move(tuple);
    if (r == OracleReply::Unknown) {
      ev.kind = StepKind::Fork;
      ev.fork_on_oracle = true;
      return ev;
    }
    ev.oracle_answer = r == OracleReply::Yes;
    next = *ev.oracle_answer ? o->yes.pc : o->no.pc;
  } else if (auto *o = std::get_if<OutputInstr>(&ins)) {
    std::size_t lo = o->lo, hi = o->hi;
    if (o->length_cell) {
      const V *len = read(*o->length_cell);
      if (!len)
        return fault(FaultKind::BlankRead);
      std::optional<long> n = dom.as_count(*len);
      if (!n || *n < 0)
        return fault(FaultKind::InvalidOutputLength);
      if (*n == 0) {
        ++s.steps;
        ev.kind = StepKind::Halted;
        return ev;
      }
      hi = lo + static_cast<std::size_t>(*n) - 1;
    }
    if (!read_range(lo, hi, ev.output))
      return fault(FaultKind::BlankRead);
    ++s.steps;
    ev.kind = StepKind::Halted;
    return ev;
  }
  ++s.steps;
  s.pc = next;
  return ev;
}

} // namespace bss
