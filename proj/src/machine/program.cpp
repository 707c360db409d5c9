#include "bss/machine/program.hpp"

#include <sstream>

namespace bss {

std::optional<std::size_t> Program::label_pc(const std::string &label) const {
  for (const auto &[pc, names] : labels)
    for (const auto &n : names)
      if (n == label)
        return pc;
  return std::nullopt;
}

namespace {

std::string cell(std::size_t i) { return "c" + std::to_string(i); }

struct Printer {
  const std::vector<Param> *params = nullptr;

  std::string operator()(const ConstInstr &c) const {
    std::string v;
    if (c.param)
      v = "$" + (params && *c.param < params->size() ? (*params)[*c.param].name
                                                     : std::to_string(*c.param));
    else
      v = to_string(*c.literal);
    return "CONST " + cell(c.dst) + " " + v;
  }
  std::string operator()(const CopyInstr &c) const {
    return "COPY " + cell(c.dst) + " " + cell(c.src);
  }
  std::string operator()(const ArithInstr &a) const {
    return to_string(a.op) + " " + cell(a.dst) + " " + cell(a.lhs) + " " + cell(a.rhs);
  }
  std::string operator()(const BranchInstr &b) const {
    return "BRANCH " + cell(b.src) + " " + b.neg.label + " " + b.zero.label + " " + b.pos.label;
  }
  std::string operator()(const JumpInstr &j) const { return "JMP " + j.target.label; }
  std::string operator()(const ShiftInstr &s) const { return s.right ? "SHIFTR" : "SHIFTL"; }
  std::string operator()(const OracleInstr &o) const {
    return "ORACLE " + cell(o.lo) + ".." + cell(o.hi) + " " + o.yes.label + " " + o.no.label;
  }
  std::string operator()(const OutputInstr &o) const {
    if (o.length_cell)
      return "OUTPUT " + cell(o.lo) + "..+" + cell(*o.length_cell);
    return "OUTPUT " + cell(o.lo) + ".." + cell(o.hi);
  }
};

} // namespace

std::string to_string(const Instruction &ins) { return std::visit(Printer{}, ins); }

std::string print_program(const Program &p) {
  std::ostringstream out;
  out << "PROGRAM " << p.name << "\n";
  out << "ARITY " << (p.arity ? std::to_string(*p.arity) : "VAR") << "\n";
  for (const auto &prm : p.params)
    out << "PARAM " << prm.name << " = " << to_string(prm.value) << "\n";
  if (p.zero_window)
    out << "ZERO " << p.zero_window->first << ".." << p.zero_window->second << "\n";
  Printer printer{&p.params};
  auto emit_labels = [&](std::size_t pc, bool has_instr) {
    auto it = p.labels.find(pc);
    if (it == p.labels.end())
      return std::string("    ");
    const auto &names = it->second;
    for (std::size_t i = 0; i + 1 < names.size(); ++i)
      out << names[i] << ":\n";
    if (!has_instr) {
      out << names.back() << ":\n";
      return std::string();
    }
    return names.back() + ": ";
  };
  for (std::size_t pc = 0; pc < p.size(); ++pc) {
    std::string prefix = emit_labels(pc, true);
    out << prefix << std::visit(printer, p.instructions[pc]) << "\n";
  }
  emit_labels(p.size(), false);
  return out.str();
}

} // namespace bss
