#include "bss/symbolic/paths.hpp"

#include "bss/errors.hpp"
#include "bss/machine/engine.hpp"

#include <algorithm>
#include <set>

namespace bss {

std::string to_string(LeafOutcome o) {
  switch (o) {
  case LeafOutcome::Halted: return "halted";
  case LeafOutcome::Fault: return "fault";
  case LeafOutcome::BudgetExhausted: return "budget_exhausted";
  }
  return "?";
}

namespace {

// f = c * g with g's numerator monic; returns (g, sign of c).
std::pair<RationalFunction, int> normalize(const RationalFunction &f) {
  const AlgebraicNumber &lc = f.numerator().leading_term().second;
  MultiPoly inv = MultiPoly::constant(f.arity(), lc.inverse());
  return {RationalFunction(inv * f.numerator(), f.denominator()), sign_at(lc)};
}

struct ExploreDomain {
  using Value = RationalFunction;
  std::size_t arity;
  const Oracle *oracle;
  bool generic;
  const PathCondition *cond;

  Value lift(const AlgebraicNumber &a) const { return RationalFunction::constant(arity, a); }

  std::optional<int> sign(const Value &v) const {
    if (auto c = v.constant_value())
      return sign_at(*c);
    auto [g, s] = normalize(v);
    for (const auto &k : cond->constraints) {
      auto [h, t] = normalize(k.f);
      if (h == g)
        return k.sign * s * t;
    }
    return std::nullopt;
  }
  std::optional<bool> is_zero(const Value &v) const {
    auto s = sign(v);
    if (!s)
      return std::nullopt;
    return *s == 0;
  }
  Value arith(const Value &a, const Value &b, ArithOp op) const { return rf_arith(a, b, op); }
  OracleReply ask(const std::vector<Value> &t) const {
    Tuple values;
    bool constant = true;
    for (const auto &v : t) {
      auto c = v.constant_value();
      constant = constant && c.has_value();
      if (c)
        values.push_back(*c);
    }
    if (constant) {
      try {
        return oracle_query(*oracle, values) ? OracleReply::Yes : OracleReply::No;
      } catch (const OracleUnsupported &) {
        return OracleReply::Unsupported;
      }
    }
    if (generic)
      return oracle->generic_policy ? OracleReply::Yes : OracleReply::No;
    for (const auto &a : cond->oracle_assumptions)
      if (a.query == t)
        return a.answer ? OracleReply::Yes : OracleReply::No;
    return OracleReply::Unknown;
  }
  std::optional<long> as_count(const Value &v) const {
    auto c = v.constant_value();
    if (!c)
      return std::nullopt;
    auto q = c->as_rational();
    if (!q || !is_integer(*q) || !q->get_num().fits_slong_p())
      return std::nullopt;
    return q->get_num().get_si();
  }
};

struct Frame {
  MachineState<RationalFunction> state;
  PathCondition cond;
  std::vector<Decision> history;
  std::size_t depth = 0;
};

class Explorer {
public:
  Explorer(const Program &p, std::size_t arity, const Oracle &o, const ExploreOptions &opts)
      : p_(p), arity_(arity), oracle_(o), opts_(opts) {}

  PathTree run() {
    tree_.arity = arity_;
    ExploreDomain dom{arity_, &oracle_, opts_.generic_oracle, nullptr};
    std::vector<RationalFunction> in;
    for (std::size_t i = 0; i < arity_; ++i)
      in.push_back(RationalFunction::variable(arity_, i));
    Frame root{initial_state(p_, in, dom), {}, {}, 0};
    tree_.nodes.push_back(PathNode{});
    explore(std::move(root), 0);
    return std::move(tree_);
  }

private:
  void leaf(Frame &f, std::size_t node, LeafOutcome outcome, std::optional<FaultKind> fault,
            std::vector<RationalFunction> output) {
    PathLeaf l{std::move(f.cond), outcome, fault, std::move(output), std::move(f.history), false, node};
    for (const auto &k : l.condition.constraints)
      if (k.sign == 0 && !k.f.is_constant())
        l.measure_zero = true;
    tree_.nodes[node].leaf = tree_.leaves.size();
    tree_.leaves.push_back(std::move(l));
  }

  void explore(Frame f, std::size_t node) {
    ExploreDomain dom{arity_, &oracle_, opts_.generic_oracle, &f.cond};
    while (true) {
      if (f.state.steps >= opts_.step_budget && f.state.pc < p_.size())
        return leaf(f, node, LeafOutcome::BudgetExhausted, std::nullopt, {});
      auto ev = step(p_, f.state, dom);
      if (ev.branch_sign)
        f.history.push_back({ev.pc, false, *ev.branch_sign});
      if (ev.oracle_answer)
        f.history.push_back({ev.pc, true, *ev.oracle_answer ? 1 : 0});
      switch (ev.kind) {
      case StepKind::Continue:
        continue;
      case StepKind::Halted:
        return leaf(f, node, LeafOutcome::Halted, std::nullopt, std::move(ev.output));
      case StepKind::Fault:
        return leaf(f, node, LeafOutcome::Fault, ev.fault, {});
      case StepKind::Fork:
        break;
      }
      if (f.depth >= opts_.depth_budget)
        return leaf(f, node, LeafOutcome::BudgetExhausted, std::nullopt, {});
      PathNode &n = tree_.nodes[node];
      n.pc = ev.pc;
      n.oracle = ev.fork_on_oracle;
      if (ev.fork_on_oracle) {
        n.query = *ev.oracle_query;
        n.labels = {1, 0};
      } else {
        n.f = *ev.fork_value;
        n.labels = {-1, 0, 1};
      }
      std::vector<int> labels = n.labels;
      for (int label : labels) {
        Frame child = f;
        ++child.depth;
        if (ev.fork_on_oracle)
          child.cond.oracle_assumptions.push_back({*ev.oracle_query, label == 1});
        else
          child.cond.constraints.push_back({*ev.fork_value, label});
        std::size_t id = tree_.nodes.size();
        PathNode c;
        c.parent = node;
        tree_.nodes.push_back(std::move(c));
        tree_.nodes[node].children.push_back(id);
        explore(std::move(child), id);
      }
      return;
    }
  }

  const Program &p_;
  std::size_t arity_;
  const Oracle &oracle_;
  ExploreOptions opts_;
  PathTree tree_;
};

} // namespace

PathTree explore_paths(const Program &p, std::size_t arity, const Oracle &oracle,
                       const ExploreOptions &opts) {
  if (p.arity && *p.arity != arity)
    throw PreconditionError("program '" + p.name + "' has arity " + std::to_string(*p.arity));
  return Explorer(p, arity, oracle, opts).run();
}

bool satisfies(const PathCondition &c, const Tuple &point, const Oracle &oracle) {
  try {
    for (const auto &k : c.constraints)
      if (sign_at(rf_eval(k.f, point)) != k.sign)
        return false;
    for (const auto &a : c.oracle_assumptions) {
      Tuple values;
      for (const auto &f : a.query)
        values.push_back(rf_eval(f, point));
      if (oracle_query(oracle, values) != a.answer)
        return false;
    }
  } catch (const PoleError &) {
    return false;
  }
  return true;
}

std::vector<MultiPoly> boundary_report(const PathTree &tree) {
  std::vector<int> leaf_output(tree.leaves.size());
  std::vector<Tuple> distinct;
  for (std::size_t i = 0; i < tree.leaves.size(); ++i) {
    const auto &l = tree.leaves[i];
    if (l.outcome != LeafOutcome::Halted)
      throw PreconditionError("boundary_report needs every leaf halted; leaf " + std::to_string(i) +
                              " is " + to_string(l.outcome));
    Tuple v;
    for (const auto &f : l.output) {
      auto c = f.constant_value();
      if (!c)
        throw PreconditionError("boundary_report needs constant outputs; leaf " + std::to_string(i) +
                                " outputs " + to_string(f));
      v.push_back(*c);
    }
    auto same = [&](const Tuple &a) {
      if (a.size() != v.size())
        return false;
      for (std::size_t k = 0; k < a.size(); ++k)
        if (sign_at(a[k] - v[k]) != 0)
          return false;
      return true;
    };
    auto it = std::find_if(distinct.begin(), distinct.end(), same);
    leaf_output[i] = static_cast<int>(it - distinct.begin());
    if (it == distinct.end())
      distinct.push_back(v);
  }
  std::vector<MultiPoly> out;
  auto add = [&](const RationalFunction &f) {
    if (f.is_constant())
      return;
    MultiPoly m = make_monic(f.numerator());
    for (const auto &g : out)
      if (g == m)
        return;
    out.push_back(m);
  };
  // Output sets per subtree, children before parents (children have larger ids).
  std::vector<std::set<int>> outputs(tree.nodes.size());
  for (std::size_t id = tree.nodes.size(); id-- > 0;) {
    const auto &n = tree.nodes[id];
    if (n.leaf)
      outputs[id].insert(leaf_output[*n.leaf]);
    for (auto c : n.children)
      outputs[id].insert(outputs[c].begin(), outputs[c].end());
  }
  for (std::size_t id = 0; id < tree.nodes.size(); ++id) {
    const auto &n = tree.nodes[id];
    if (n.children.empty() || outputs[id].size() < 2)
      continue;
    if (n.f)
      add(*n.f);
    for (const auto &f : n.query)
      add(f);
  }
  return out;
}

} // namespace bss
