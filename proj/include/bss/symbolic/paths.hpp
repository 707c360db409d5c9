#pragma once

#include "bss/exact/rational_function.hpp"
#include "bss/machine/interpreter.hpp"

#include <optional>
#include <string>
#include <vector>

namespace bss {

struct SignConstraint {
  RationalFunction f;
  int sign = 0;
};

struct OracleAssumption {
  std::vector<RationalFunction> query;
  bool answer = false;
};

struct PathCondition {
  std::vector<SignConstraint> constraints;
  std::vector<OracleAssumption> oracle_assumptions;
};

enum class LeafOutcome { Halted, Fault, BudgetExhausted };
std::string to_string(LeafOutcome o);

struct PathLeaf {
  PathCondition condition;
  LeafOutcome outcome = LeafOutcome::Halted;
  std::optional<FaultKind> fault;
  std::vector<RationalFunction> output;
  std::vector<Decision> history;
  /// Some constraint demands a nonconstant function be exactly 0.
  bool measure_zero = false;
  std::size_t node = 0;
};

/// One fork: the function (or oracle tuple) it splits on, and its children in
/// the order -, 0, + (or yes, no).
struct PathNode {
  std::optional<std::size_t> parent;
  std::size_t pc = 0;
  bool oracle = false;
  std::optional<RationalFunction> f;
  std::vector<RationalFunction> query;
  std::vector<std::size_t> children;
  std::vector<int> labels; // sign or 1/0 per child
  std::optional<std::size_t> leaf;
};

struct PathTree {
  std::size_t arity = 0;
  std::vector<PathNode> nodes; // nodes[0] is the root
  std::vector<PathLeaf> leaves;
};

struct ExploreOptions {
  std::size_t depth_budget = 30;     // forks along one path
  std::size_t step_budget = 100000;  // steps along one path
  /// Use oracle.generic_policy for nonconstant queries instead of splitting.
  bool generic_oracle = false;
};

/// Symbolic execution in the indeterminates Y1..Yk. Unknown signs split three
/// ways, unknown oracle answers two ways. Known constraints (up to a constant
/// factor) are reused, so one function never gets conflicting signs.
PathTree explore_paths(const Program &p, std::size_t arity, const Oracle &oracle,
                       const ExploreOptions &opts = {});

/// Whether a point satisfies every sign constraint and oracle assumption.
bool satisfies(const PathCondition &c, const Tuple &point, const Oracle &oracle);

/// Numerators (made monic) of the fork functions whose subtrees reach
/// different outputs. Their zero sets contain the boundaries of the output
/// level sets. Throws PreconditionError unless every leaf halted with a
/// constant output.
std::vector<MultiPoly> boundary_report(const PathTree &tree);

} // namespace bss
