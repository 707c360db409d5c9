#pragma once

#include "bss/exact/number_field.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace bss {

/// A jump target: the label as written and the instruction index it names.
/// An index equal to the program size means "the end" (halt, empty output).
struct Target {
  std::string label;
  std::size_t pc = 0;
  bool operator==(const Target &) const = default;
};

struct ConstInstr {
  std::size_t dst = 0;
  std::optional<Rational> literal;
  std::optional<std::size_t> param; // index into Program::params
  bool operator==(const ConstInstr &) const = default;
};

struct CopyInstr {
  std::size_t dst = 0, src = 0;
  bool operator==(const CopyInstr &) const = default;
};

struct ArithInstr {
  ArithOp op = ArithOp::Add;
  std::size_t dst = 0, lhs = 0, rhs = 0;
  bool operator==(const ArithInstr &) const = default;
};

struct BranchInstr {
  std::size_t src = 0;
  Target neg, zero, pos;
  bool operator==(const BranchInstr &) const = default;
};

struct JumpInstr {
  Target target;
  bool operator==(const JumpInstr &) const = default;
};

struct ShiftInstr {
  bool right = true;
  bool operator==(const ShiftInstr &) const = default;
};

struct OracleInstr {
  std::size_t lo = 0, hi = 0;
  Target yes, no;
  bool operator==(const OracleInstr &) const = default;
};

/// OUTPUT c<lo>..c<hi>, or with `length_cell` set, OUTPUT c<lo>..+c<k>:
/// the tuple c<lo>, ..., c<lo+n-1> where n is the value held in c<k>.
struct OutputInstr {
  std::size_t lo = 0, hi = 0;
  std::optional<std::size_t> length_cell;
  bool operator==(const OutputInstr &) const = default;
};

using Instruction = std::variant<ConstInstr, CopyInstr, ArithInstr, BranchInstr, JumpInstr,
                                 ShiftInstr, OracleInstr, OutputInstr>;

struct Param {
  std::string name;
  AlgebraicNumber value;
  bool operator==(const Param &) const = default;
};

struct Program {
  std::string name;
  std::vector<Param> params;
  std::optional<std::size_t> arity; // empty: ARITY VAR
  /// Absolute cells initialized to 0 before the run (ZERO lo..hi).
  std::optional<std::pair<long, long>> zero_window;
  std::vector<Instruction> instructions;
  /// Labels attached to each instruction index (index == size for trailing labels).
  std::map<std::size_t, std::vector<std::string>> labels;

  std::size_t size() const { return instructions.size(); }
  std::optional<std::size_t> label_pc(const std::string &label) const;
  bool operator==(const Program &) const = default;
};

std::string to_string(const Instruction &ins);
/// DSL text that parse_program reads back to an equal Program.
std::string print_program(const Program &p);

} // namespace bss
