#include "bss/machine/parser.hpp"

#include "bss/errors.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace bss {

namespace {

std::string trim(std::string_view s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a])))
    ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1])))
    --b;
  return std::string(s.substr(a, b - a));
}

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i)
    if (i == s.size() || s[i] == sep) {
      out.push_back(trim(s.substr(start, i - start)));
      start = i + 1;
    }
  return out;
}

bool is_identifier(const std::string &s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_'))
    return false;
  for (char c : s)
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_'))
      return false;
  return true;
}

} // namespace

FieldRegistry::FieldRegistry() {
  fields_["Q"] = NumberField::rationals();
  fields_["sqrt2"] = NumberField::create(parse_unipoly("X^2 - 2"),
                                         RatInterval(Rational(1), Rational(2)), "sqrt2");
}

void FieldRegistry::add(const std::string &name, FieldPtr field) { fields_[name] = std::move(field); }

FieldPtr FieldRegistry::add_spec(const std::string &spec) {
  std::string body = spec, name;
  if (auto eq = spec.find('='); eq != std::string::npos) {
    name = trim(std::string_view(spec).substr(0, eq));
    body = spec.substr(eq + 1);
  }
  auto parts = split(body, ';');
  if (parts.size() != 3)
    throw ParseError("field spec must be [name=]minpoly;lo;hi");
  if (name.empty())
    name = "K" + std::to_string(fields_.size() - 1);
  if (!is_identifier(name))
    throw ParseError("bad field name '" + name + "'");
  auto f = NumberField::create(parse_unipoly(parts[0]),
                               RatInterval(parse_rational(parts[1]), parse_rational(parts[2])), name);
  add(name, f);
  return f;
}

FieldPtr FieldRegistry::find(const std::string &name) const {
  auto it = fields_.find(name);
  return it == fields_.end() ? nullptr : it->second;
}

AlgebraicNumber parse_value(std::string_view text, const FieldRegistry &fields) {
  std::string s = trim(text);
  auto colon = s.find(':');
  if (colon == std::string::npos)
    return AlgebraicNumber(parse_rational(s));
  std::string name = trim(std::string_view(s).substr(0, colon));
  FieldPtr f = fields.find(name);
  if (!f)
    throw ParseError("unknown field '" + name + "'");
  std::string rest = trim(std::string_view(s).substr(colon + 1));
  if (rest.size() < 2 || rest.front() != '(' || rest.back() != ')')
    throw ParseError("field element must look like " + name + ":(c0,c1,...)");
  std::vector<Rational> coords;
  for (const auto &c : split(std::string_view(rest).substr(1, rest.size() - 2), ','))
    coords.push_back(parse_rational(c));
  if (coords.size() > f->degree())
    throw ParseError("too many coordinates for field '" + name + "'");
  coords.resize(f->degree());
  return AlgebraicNumber(f, coords);
}

std::vector<AlgebraicNumber> parse_tuple(std::string_view text, const FieldRegistry &fields) {
  std::string s = trim(text);
  if (s.size() < 2 || s.front() != '(' || s.back() != ')')
    throw ParseError("tuple must be parenthesized: (v1, v2, ...)");
  std::string inner = trim(std::string_view(s).substr(1, s.size() - 2));
  std::vector<AlgebraicNumber> out;
  if (inner.empty())
    return out;
  // Split on commas outside nested parentheses.
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= inner.size(); ++i) {
    if (i < inner.size() && inner[i] == '(')
      ++depth;
    else if (i < inner.size() && inner[i] == ')')
      --depth;
    else if (i == inner.size() || (inner[i] == ',' && depth == 0)) {
      out.push_back(parse_value(std::string_view(inner).substr(start, i - start), fields));
      start = i + 1;
    }
  }
  return out;
}

namespace {

struct PendingTarget {
  Target *target;
  std::size_t line;
};

class ProgramParser {
public:
  ProgramParser(std::string_view text, const FieldRegistry &fields) : text_(text), fields_(fields) {}

  Program run() {
    std::istringstream in{std::string(text_)};
    std::string raw;
    bool body = false;
    while (std::getline(in, raw)) {
      ++line_;
      if (auto hash = raw.find('#'); hash != std::string::npos)
        raw.erase(hash);
      std::string ln = trim(raw);
      if (ln.empty())
        continue;
      auto toks = tokens(ln);
      const std::string &head = toks[0];
      if (!body && head == "PROGRAM") {
        need(toks, 2);
        prog_.name = toks[1];
        seen_program_ = true;
      } else if (!body && head == "ARITY") {
        need(toks, 2);
        if (toks[1] == "VAR")
          prog_.arity.reset();
        else
          prog_.arity = count(toks[1]);
      } else if (!body && head == "PARAM") {
        // PARAM name = value
        auto eq = ln.find('=');
        if (eq == std::string::npos)
          fail("PARAM needs '<name> = <value>'");
        std::string name = trim(std::string_view(ln).substr(5, eq - 5));
        if (!is_identifier(name))
          fail("bad parameter name '" + name + "'");
        for (const auto &p : prog_.params)
          if (p.name == name)
            fail("duplicate parameter '" + name + "'");
        try {
          prog_.params.push_back({name, parse_value(std::string_view(ln).substr(eq + 1), fields_)});
        } catch (const ParseError &e) {
          fail(e.what());
        }
      } else if (!body && head == "ZERO") {
        need(toks, 2);
        auto dots = toks[1].find("..");
        if (dots == std::string::npos)
          fail("ZERO needs <lo>..<hi>");
        long lo = integer(toks[1].substr(0, dots)), hi = integer(toks[1].substr(dots + 2));
        if (lo > hi)
          fail("ZERO window is empty");
        prog_.zero_window = std::make_pair(lo, hi);
      } else {
        body = true;
        instruction_line(ln);
      }
    }
    if (!seen_program_)
      throw ParseError("missing PROGRAM header", 1);
    for (const auto &l : pending_labels_)
      attach(l, prog_.size());
    resolve();
    return std::move(prog_);
  }

private:
  [[noreturn]] void fail(const std::string &msg) const { throw ParseError(msg, line_); }

  static std::vector<std::string> tokens(const std::string &s) {
    std::istringstream in(s);
    std::vector<std::string> out;
    std::string t;
    while (in >> t)
      out.push_back(t);
    return out;
  }

  void need(const std::vector<std::string> &toks, std::size_t n) const {
    if (toks.size() != n)
      fail("'" + toks[0] + "' expects " + std::to_string(n - 1) + " operand(s)");
  }

  std::size_t count(const std::string &s) const {
    if (s.empty() || s.size() > 12)
      fail("bad count '" + s + "'");
    for (char c : s)
      if (!std::isdigit(static_cast<unsigned char>(c)))
        fail("bad count '" + s + "'");
    return std::stoul(s);
  }

  long integer(const std::string &s) const {
    if (!s.empty() && s[0] == '-')
      return -static_cast<long>(count(s.substr(1)));
    return static_cast<long>(count(s));
  }

  std::size_t cell(const std::string &s) const {
    if (s.size() < 2 || s[0] != 'c')
      fail("expected a cell like c0, got '" + s + "'");
    return count(s.substr(1));
  }

  std::pair<std::size_t, std::size_t> range(const std::string &s) const {
    auto dots = s.find("..");
    if (dots == std::string::npos)
      fail("expected a cell range like c0..c3, got '" + s + "'");
    std::size_t lo = cell(s.substr(0, dots)), hi = cell(s.substr(dots + 2));
    if (lo > hi)
      fail("cell range '" + s + "' is reversed");
    return {lo, hi};
  }

  Target target(const std::string &label) {
    if (!is_identifier(label))
      fail("bad label '" + label + "'");
    return Target{label, 0};
  }

  void attach(const std::string &label, std::size_t pc) {
    if (prog_.label_pc(label))
      fail("duplicate label '" + label + "'");
    prog_.labels[pc].push_back(label);
  }

  void instruction_line(std::string ln) {
    while (true) {
      auto colon = ln.find(':');
      if (colon == std::string::npos)
        break;
      std::string label = trim(std::string_view(ln).substr(0, colon));
      if (!is_identifier(label))
        break;
      for (const auto &l : pending_labels_)
        if (l == label)
          fail("duplicate label '" + label + "'");
      pending_labels_.push_back(label);
      ln = trim(std::string_view(ln).substr(colon + 1));
    }
    if (ln.empty())
      return;
    auto toks = tokens(ln);
    const std::string &op = toks[0];
    std::vector<Instruction> emitted;
    if (op == "CONST") {
      need(toks, 3);
      ConstInstr c{cell(toks[1]), std::nullopt, std::nullopt};
      if (toks[2][0] == '$') {
        std::string name = toks[2].substr(1);
        bool found = false;
        for (std::size_t i = 0; i < prog_.params.size(); ++i)
          if (prog_.params[i].name == name) {
            c.param = i;
            found = true;
          }
        if (!found && !name.empty() && std::all_of(name.begin(), name.end(), [](char ch) {
              return std::isdigit(static_cast<unsigned char>(ch));
            })) {
          std::size_t idx = count(name);
          if (idx >= prog_.params.size())
            fail("parameter index $" + name + " out of range");
          c.param = idx;
          found = true;
        }
        if (!found)
          fail("unknown parameter '" + toks[2] + "'");
      } else {
        try {
          c.literal = parse_rational(toks[2]);
        } catch (const ParseError &e) {
          fail(e.what());
        }
      }
      emitted.push_back(c);
    } else if (op == "COPY") {
      need(toks, 3);
      emitted.push_back(CopyInstr{cell(toks[1]), cell(toks[2])});
    } else if (op == "ADD" || op == "SUB" || op == "MUL" || op == "DIV") {
      need(toks, 4);
      ArithOp a = op == "ADD" ? ArithOp::Add : op == "SUB" ? ArithOp::Sub : op == "MUL" ? ArithOp::Mul : ArithOp::Div;
      emitted.push_back(ArithInstr{a, cell(toks[1]), cell(toks[2]), cell(toks[3])});
    } else if (op == "BRANCH") {
      need(toks, 5);
      emitted.push_back(BranchInstr{cell(toks[1]), target(toks[2]), target(toks[3]), target(toks[4])});
    } else if (op == "CMP") {
      // CMP ci cj ct Lneg Lzero Lpos: branch on ci - cj via scratch ct.
      need(toks, 7);
      std::size_t t = cell(toks[3]);
      emitted.push_back(ArithInstr{ArithOp::Sub, t, cell(toks[1]), cell(toks[2])});
      emitted.push_back(BranchInstr{t, target(toks[4]), target(toks[5]), target(toks[6])});
    } else if (op == "JMP") {
      need(toks, 2);
      emitted.push_back(JumpInstr{target(toks[1])});
    } else if (op == "SHIFTL" || op == "SHIFTR") {
      need(toks, 1);
      emitted.push_back(ShiftInstr{op == "SHIFTR"});
    } else if (op == "ORACLE") {
      need(toks, 4);
      auto [lo, hi] = range(toks[1]);
      emitted.push_back(OracleInstr{lo, hi, target(toks[2]), target(toks[3])});
    } else if (op == "OUTPUT") {
      need(toks, 2);
      auto plus = toks[1].find("..+");
      if (plus != std::string::npos) {
        std::size_t lo = cell(toks[1].substr(0, plus));
        emitted.push_back(OutputInstr{lo, lo, cell(toks[1].substr(plus + 3))});
      } else {
        auto [lo, hi] = range(toks[1]);
        emitted.push_back(OutputInstr{lo, hi, std::nullopt});
      }
    } else {
      fail("unknown instruction '" + op + "'");
    }
    for (const auto &l : pending_labels_)
      attach(l, prog_.size());
    pending_labels_.clear();
    for (auto &ins : emitted) {
      prog_.instructions.push_back(std::move(ins));
      lines_.push_back(line_);
    }
  }

  void resolve() {
    auto fix = [&](Target &t, std::size_t ln) {
      auto pc = prog_.label_pc(t.label);
      if (!pc)
        throw ParseError("unresolved label '" + t.label + "'", ln);
      t.pc = *pc;
    };
    for (std::size_t i = 0; i < prog_.size(); ++i) {
      std::visit(
          [&](auto &ins) {
            using T = std::decay_t<decltype(ins)>;
            if constexpr (std::is_same_v<T, BranchInstr>) {
              fix(ins.neg, lines_[i]);
              fix(ins.zero, lines_[i]);
              fix(ins.pos, lines_[i]);
            } else if constexpr (std::is_same_v<T, JumpInstr>) {
              fix(ins.target, lines_[i]);
            } else if constexpr (std::is_same_v<T, OracleInstr>) {
              fix(ins.yes, lines_[i]);
              fix(ins.no, lines_[i]);
            }
          },
          prog_.instructions[i]);
    }
  }

  std::string_view text_;
  const FieldRegistry &fields_;
  Program prog_;
  std::size_t line_ = 0;
  bool seen_program_ = false;
  std::vector<std::string> pending_labels_;
  std::vector<std::size_t> lines_;
};

} // namespace

Program parse_program(std::string_view text, const FieldRegistry &fields) {
  return ProgramParser(text, fields).run();
}

} // namespace bss
