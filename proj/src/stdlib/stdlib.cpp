#include "bss/stdlib/stdlib.hpp"

#include "bss/errors.hpp"
#include "bss/machine/parser.hpp"

#include <functional>
#include <map>
#include <sstream>

namespace bss {

namespace {

class Asm {
public:
  Asm(const std::string &name, std::size_t arity) {
    out_ << "PROGRAM " << name << "\nARITY " << arity << "\n";
  }
  void param(const std::string &name, const Rational &v) {
    out_ << "PARAM " << name << " = " << to_string(v) << "\n";
  }
  void comment(const std::string &text) { out_ << "# " << text << "\n"; }
  void label(const std::string &l) { out_ << l << ":\n"; }
  void op(const std::string &text) { out_ << "    " << text << "\n"; }
  std::string text() const { return out_.str(); }

private:
  std::ostringstream out_;
};

std::string c(std::size_t i) { return "c" + std::to_string(i); }

// Tape programs keep their working registers in a block of cells that
// travels along a data sequence. With the block at c0..c(G-1) the element
// in focus is cG; elements to the left sit just before the block, elements
// to the right follow the focus. c(G-1) is scratch and is clobbered by moves.
class Tape {
public:
  Tape(Asm &a, std::vector<std::string> names) : a_(a) {
    names.push_back("SCR");
    for (std::size_t i = 0; i < names.size(); ++i)
      idx_[names[i]] = i;
    g_ = names.size();
  }
  std::string operator[](const std::string &name) const { return c(idx_.at(name)); }
  std::size_t index(const std::string &name) const { return idx_.at(name); }
  std::size_t size() const { return g_; }
  std::string focus() const { return c(g_); }

  void right() {
    for (std::size_t i = g_ - 1; i-- > 0;)
      a_.op("COPY " + c(i + 1) + " " + c(i));
    a_.op("COPY c0 " + focus());
    a_.op("SHIFTR");
  }
  void left() {
    a_.op("SHIFTL");
    a_.op("COPY " + focus() + " c0");
    for (std::size_t i = 0; i + 1 < g_; ++i)
      a_.op("COPY " + c(i) + " " + c(i + 1));
  }

  // Entry layout: inputs in c0..c(arity-1). The block is built at
  // arity..arity+G-1 with a left sentinel 0 just before it and the
  // sequence (0) plus a right sentinel after it; focus ends on the first
  // element. `inputs` names the registers receiving the inputs.
  void setup(std::size_t arity, const std::vector<std::string> &inputs) {
    for (std::size_t i = 0; i < inputs.size(); ++i)
      a_.op("COPY " + c(arity + index(inputs[i])) + " " + c(i));
    a_.op("CONST " + c(arity - 1) + " 0");
    for (const auto &[name, i] : idx_) {
      bool is_input = false;
      for (const auto &in : inputs)
        is_input = is_input || in == name;
      if (!is_input)
        a_.op("CONST " + c(arity + i) + (name == "ONE" ? " 1" : " 0"));
    }
    a_.op("CONST " + c(arity + g_) + " 1");
    a_.op("CONST " + c(arity + g_ + 1) + " 0");
    for (std::size_t i = 0; i < arity; ++i)
      a_.op("SHIFTR");
  }

private:
  Asm &a_;
  std::map<std::string, std::size_t> idx_;
  std::size_t g_ = 0;
};

// Replaces IDX by rational_at(IDX) in QV, then BRANCH RET to one of three
// return labels (or jumps to `single_return`). Uses QP, QH, QPH, GA, GB, TMP.
void emit_decode(Asm &a, const std::function<std::string(const std::string &)> &r,
                 const std::string &p, const std::string &ret_neg, const std::string &ret_zero,
                 const std::string &ret_pos) {
  a.label(p + "start");
  a.op("CONST " + r("QH") + " 0");
  a.op("CONST " + r("QP") + " 0");
  a.op("CONST " + r("QPH") + " 0");
  a.label(p + "loop");
  a.op("BRANCH " + r("IDX") + " " + p + "done " + p + "done " + p + "body");
  a.label(p + "body");
  a.op("SUB " + r("IDX") + " " + r("IDX") + " " + r("ONE"));
  a.op("BRANCH " + r("QH") + " " + p + "init " + p + "init " + p + "adv");
  a.label(p + "init");
  a.op("CONST " + r("QP") + " 1");
  a.op("CONST " + r("QH") + " 2");
  a.op("JMP " + p + "loop");
  a.label(p + "adv");
  a.op("BRANCH " + r("QPH") + " " + p + "flip " + p + "flip " + p + "next");
  a.label(p + "flip");
  a.op("CONST " + r("QPH") + " 1");
  a.op("JMP " + p + "loop");
  a.label(p + "next");
  a.op("CONST " + r("QPH") + " 0");
  a.label(p + "bump");
  a.op("ADD " + r("QP") + " " + r("QP") + " " + r("ONE"));
  a.op("CMP " + r("QP") + " " + r("QH") + " " + r("TMP") + " " + p + "gcd " + p + "newh " + p + "newh");
  a.label(p + "newh");
  a.op("ADD " + r("QH") + " " + r("QH") + " " + r("ONE"));
  a.op("CONST " + r("QP") + " 1");
  a.label(p + "gcd");
  a.op("COPY " + r("GA") + " " + r("QP"));
  a.op("SUB " + r("GB") + " " + r("QH") + " " + r("QP"));
  a.label(p + "gl");
  a.op("CMP " + r("GA") + " " + r("GB") + " " + r("TMP") + " " + p + "bless " + p + "gdone " + p + "amore");
  a.label(p + "amore");
  a.op("SUB " + r("GA") + " " + r("GA") + " " + r("GB"));
  a.op("JMP " + p + "gl");
  a.label(p + "bless");
  a.op("SUB " + r("GB") + " " + r("GB") + " " + r("GA"));
  a.op("JMP " + p + "gl");
  a.label(p + "gdone");
  a.op("SUB " + r("TMP") + " " + r("GA") + " " + r("ONE"));
  a.op("BRANCH " + r("TMP") + " " + p + "bump " + p + "loop " + p + "bump");
  a.label(p + "done");
  a.op("BRANCH " + r("QH") + " " + p + "zero " + p + "zero " + p + "val");
  a.label(p + "zero");
  a.op("CONST " + r("QV") + " 0");
  a.op("JMP " + p + "ret");
  a.label(p + "val");
  a.op("SUB " + r("TMP") + " " + r("QH") + " " + r("QP"));
  a.op("DIV " + r("QV") + " " + r("QP") + " " + r("TMP"));
  a.op("BRANCH " + r("QPH") + " " + p + "ret " + p + "ret " + p + "neg");
  a.label(p + "neg");
  a.op("CONST " + r("TMP") + " 0");
  a.op("SUB " + r("QV") + " " + r("TMP") + " " + r("QV"));
  a.label(p + "ret");
  if (ret_zero.empty() && ret_pos.empty())
    a.op("JMP " + ret_neg);
  else
    a.op("BRANCH " + r("RET") + " " + ret_neg + " " + ret_zero + " " + ret_pos);
}

// Successor of the index sequence; elements are stored as a_j + 1. Focus
// enters and leaves on the right sentinel. Keeps LEN current.
void emit_next_sequence(Asm &a, Tape &t, const std::string &done) {
  auto R = [&](const std::string &n) { return t[n]; };
  std::string f = t.focus();
  t.left();
  a.op("CMP " + f + " " + R("ONE") + " " + R("TMP") + " n_pop n_pop n_dec");
  a.label("n_dec");
  a.op("SUB " + f + " " + f + " " + R("ONE"));
  t.right();
  a.op("CONST " + f + " 1");
  a.op("ADD " + R("LEN") + " " + R("LEN") + " " + R("ONE"));
  t.right();
  a.op("CONST " + f + " 0");
  a.op("JMP " + done);
  a.label("n_pop");
  a.op("CONST " + R("T") + " 0");
  a.label("n_pl");
  a.op("CMP " + f + " " + R("ONE") + " " + R("TMP") + " n_popdone n_popone n_popdone");
  a.label("n_popone");
  a.op("ADD " + R("T") + " " + R("T") + " " + R("ONE"));
  a.op("SUB " + R("LEN") + " " + R("LEN") + " " + R("ONE"));
  a.op("CONST " + f + " 0");
  t.left();
  a.op("JMP n_pl");
  a.label("n_popdone");
  a.op("BRANCH " + f + " n_empty n_empty n_dec2");
  a.label("n_dec2");
  a.op("SUB " + f + " " + f + " " + R("ONE"));
  a.label("n_empty");
  t.right();
  a.op("ADD " + f + " " + R("T") + " " + R("ONE"));
  a.op("ADD " + R("LEN") + " " + R("LEN") + " " + R("ONE"));
  t.right();
  a.op("CONST " + f + " 0");
  a.op("JMP " + done);
}

std::string sgn_src() {
  Asm a("sgn", 1);
  a.op("BRANCH c0 neg zero pos");
  a.label("neg");
  a.op("CONST c1 -1");
  a.op("OUTPUT c1..c1");
  a.label("zero");
  a.op("CONST c1 0");
  a.op("OUTPUT c1..c1");
  a.label("pos");
  a.op("CONST c1 1");
  a.op("OUTPUT c1..c1");
  return a.text();
}

std::string positive_src() {
  Asm a("positive", 1);
  a.op("BRANCH c0 no no yes");
  a.label("yes");
  a.op("CONST c1 1");
  a.op("OUTPUT c1..c1");
  a.label("no");
  a.op("CONST c1 0");
  a.op("OUTPUT c1..c1");
  return a.text();
}

std::string interval_member_src(const std::vector<Rational> &p) {
  Asm a("interval_member", 1);
  a.param("a", p[0]);
  a.param("b", p[1]);
  a.op("CONST c1 $a");
  a.op("SUB c2 c0 c1");
  a.op("BRANCH c2 no yes upper");
  a.label("upper");
  a.op("CONST c1 $b");
  a.op("SUB c2 c0 c1");
  a.op("BRANCH c2 yes yes no");
  a.label("yes");
  a.op("CONST c3 1");
  a.op("OUTPUT c3..c3");
  a.label("no");
  a.op("CONST c3 0");
  a.op("OUTPUT c3..c3");
  return a.text();
}

std::string even_zeros_src() {
  Asm a("even_zeros", 1);
  a.comment("1 iff 2^-(2m+1) <= x <= 2^-2m for some m >= 0, with 0 < x < 1");
  a.op("CONST c1 1");
  a.op("CONST c2 1/2");
  a.op("BRANCH c0 no no below_one");
  a.label("below_one");
  a.op("SUB c3 c0 c1");
  a.op("BRANCH c3 even no no");
  a.label("even");
  a.op("SUB c3 c0 c2");
  a.op("BRANCH c3 double_odd yes yes");
  a.label("double_odd");
  a.op("ADD c0 c0 c0");
  a.op("SUB c3 c0 c2");
  a.op("BRANCH c3 double_even yes no");
  a.label("double_even");
  a.op("ADD c0 c0 c0");
  a.op("JMP even");
  a.label("yes");
  a.op("CONST c3 1");
  a.op("OUTPUT c3..c3");
  a.label("no");
  a.op("CONST c3 0");
  a.op("OUTPUT c3..c3");
  return a.text();
}

std::string reciprocal_src(const std::vector<Rational> &p) {
  Asm a("reciprocal", 1);
  a.param("a", p[0]);
  a.op("CONST c1 $a");
  a.op("SUB c2 c0 c1");
  a.op("BRANCH c2 ok pole ok");
  a.label("ok");
  a.op("CONST c3 1");
  a.op("DIV c3 c3 c2");
  a.op("OUTPUT c3..c3");
  a.label("pole");
  a.op("JMP pole");
  return a.text();
}

std::string cantor_cosemidecider_src() {
  Asm a("cantor_cosemidecider", 1);
  a.comment("halts iff x is outside the Cantor set; output is the level of the");
  a.comment("deleted middle third containing x, or -1 outside [0,1]");
  a.op("CONST c1 1");
  a.op("CONST c2 1/3");
  a.op("CONST c3 2/3");
  a.op("CONST c4 0");
  a.op("CONST c6 3");
  a.op("CONST c7 2");
  a.op("BRANCH c0 outside loop loop");
  a.label("loop");
  a.op("SUB c5 c0 c1");
  a.op("BRANCH c5 level level outside");
  a.label("level");
  a.op("SUB c5 c0 c2");
  a.op("BRANCH c5 low low mid");
  a.label("mid");
  a.op("SUB c5 c0 c3");
  a.op("BRANCH c5 deleted high high");
  a.label("low");
  a.op("MUL c0 c0 c6");
  a.op("ADD c4 c4 c1");
  a.op("JMP level");
  a.label("high");
  a.op("MUL c0 c0 c6");
  a.op("SUB c0 c0 c7");
  a.op("ADD c4 c4 c1");
  a.op("JMP level");
  a.label("outside");
  a.op("CONST c4 -1");
  a.label("deleted");
  a.op("OUTPUT c4..c4");
  return a.text();
}

std::string q_enumerator_src() {
  Asm a("q_enumerator", 1);
  a.comment("n-th element of the fixed enumeration of Q; inputs that are not");
  a.comment("naturals count as the next natural up (negatives as 0)");
  std::map<std::string, std::string> cells{{"IDX", "c0"}, {"ONE", "c1"}, {"QV", "c2"}, {"QP", "c3"},
                                           {"QH", "c4"}, {"QPH", "c5"}, {"GA", "c6"}, {"GB", "c7"},
                                           {"TMP", "c8"}};
  a.op("CONST c1 1");
  emit_decode(a, [&](const std::string &n) { return cells.at(n); }, "d_", "out", "", "");
  a.label("out");
  a.op("OUTPUT c2..c2");
  return a.text();
}

std::string algebraic_semidecider_src() {
  Asm a("algebraic_semidecider", 1);
  a.comment("halts iff p(x) = 0 for some nonzero p in Q[X], trying polynomials");
  a.comment("in the fixed enumeration; output is the 1-based position of p");
  Tape t(a, {"X", "ONE", "ACC", "COUNT", "IDX", "QV", "QP", "QH", "QPH", "GA", "GB", "TMP", "RET",
             "T", "LEN"});
  auto r = [&](const std::string &n) { return t[n]; };
  std::string f = t.focus();
  t.setup(1, {"X"});
  a.op("CONST " + r("COUNT") + " 1");
  a.op("CONST " + r("LEN") + " 1");
  a.label("main");
  a.op("COPY " + r("IDX") + " " + f);
  a.op("CONST " + r("RET") + " -1");
  a.op("JMP d_start");
  a.label("lead_ret");
  a.op("COPY " + r("ACC") + " " + r("QV"));
  t.right();
  a.label("h_loop");
  a.op("BRANCH " + f + " h_end h_end h_body");
  a.label("h_body");
  a.op("SUB " + r("IDX") + " " + f + " " + r("ONE"));
  a.op("CONST " + r("RET") + " 0");
  a.op("JMP d_start");
  a.label("coef_ret");
  a.op("MUL " + r("ACC") + " " + r("ACC") + " " + r("X"));
  a.op("ADD " + r("ACC") + " " + r("ACC") + " " + r("QV"));
  t.right();
  a.op("JMP h_loop");
  a.label("h_end");
  a.op("BRANCH " + r("ACC") + " next found next");
  a.label("found");
  a.op("OUTPUT " + r("COUNT") + ".." + r("COUNT"));
  a.label("next");
  emit_next_sequence(a, t, "rewind");
  a.label("rewind");
  t.left();
  a.op("BRANCH " + f + " rewound rewound rewind");
  a.label("rewound");
  t.right();
  a.op("ADD " + r("COUNT") + " " + r("COUNT") + " " + r("ONE"));
  a.op("JMP main");
  emit_decode(a, r, "d_", "lead_ret", "coef_ret", "coef_ret");
  return a.text();
}

std::string qx_enumerator_src() {
  Asm a("qx_enumerator", 1);
  a.comment("n-th polynomial of the fixed enumeration of Q[X], coefficients");
  a.comment("leading first");
  Tape t(a, {"NCNT", "ONE", "IDX", "QV", "QP", "QH", "QPH", "GA", "GB", "TMP", "RET", "T", "LEN",
             "J"});
  auto r = [&](const std::string &n) { return t[n]; };
  std::string f = t.focus();
  t.setup(1, {"NCNT"});
  a.op("CONST " + r("LEN") + " 1");
  t.right();
  a.label("count");
  a.op("BRANCH " + r("NCNT") + " rewind rewind step");
  a.label("step");
  a.op("SUB " + r("NCNT") + " " + r("NCNT") + " " + r("ONE"));
  emit_next_sequence(a, t, "count");
  a.label("rewind");
  t.left();
  a.op("BRANCH " + f + " rewound rewound rewind");
  a.label("rewound");
  t.right();
  a.op("CONST " + r("J") + " 0");
  a.label("mat");
  a.op("BRANCH " + r("J") + " rest lead rest");
  a.label("lead");
  a.op("COPY " + r("IDX") + " " + f);
  a.op("JMP d_start");
  a.label("rest");
  a.op("SUB " + r("IDX") + " " + f + " " + r("ONE"));
  a.op("JMP d_start");
  a.label("decoded");
  a.op("COPY " + f + " " + r("QV"));
  t.right();
  a.op("ADD " + r("J") + " " + r("J") + " " + r("ONE"));
  a.op("CMP " + r("J") + " " + r("LEN") + " " + r("TMP") + " mat back back");
  a.label("back");
  t.left();
  a.op("SUB " + r("J") + " " + r("J") + " " + r("ONE"));
  a.op("BRANCH " + r("J") + " out out back");
  a.label("out");
  a.op("OUTPUT " + f + "..+" + r("LEN"));
  emit_decode(a, r, "d_", "decoded", "", "");
  return a.text();
}

std::string dependence_src() {
  Asm a("dependence", 2);
  a.comment("halts iff q(x1, x2) = 0 for some nonzero q in Q[Y1,Y2], trying");
  a.comment("polynomials in the fixed enumeration; output is the 1-based position");
  Tape t(a, {"X1", "X2", "ONE", "ACC", "COUNT", "IDX", "QV", "QP", "QH", "QPH", "GA", "GB", "TMP",
             "RET", "T", "LEN", "J", "E1", "E2", "MV", "K"});
  auto r = [&](const std::string &n) { return t[n]; };
  std::string f = t.focus();
  t.setup(2, {"X1", "X2"});
  a.op("CONST " + r("COUNT") + " 1");
  a.op("CONST " + r("LEN") + " 1");
  t.right();
  a.label("main");
  a.op("CONST " + r("ACC") + " 0");
  a.op("CONST " + r("J") + " 0");
  a.op("CONST " + r("E1") + " 0");
  a.op("CONST " + r("E2") + " 0");
  a.label("m_loop");
  t.left();
  a.op("BRANCH " + f + " m_end m_end m_body");
  a.label("m_body");
  a.op("ADD " + r("TMP") + " " + r("J") + " " + r("ONE"));
  a.op("CMP " + r("TMP") + " " + r("LEN") + " " + r("TMP") + " m_rest m_lead m_rest");
  a.label("m_lead");
  a.op("COPY " + r("IDX") + " " + f);
  a.op("JMP d_start");
  a.label("m_rest");
  a.op("SUB " + r("IDX") + " " + f + " " + r("ONE"));
  a.op("JMP d_start");
  a.label("decoded");
  a.op("COPY " + r("MV") + " " + r("QV"));
  a.op("COPY " + r("K") + " " + r("E1"));
  a.label("pow1");
  a.op("BRANCH " + r("K") + " pow1_done pow1_done pow1_body");
  a.label("pow1_body");
  a.op("MUL " + r("MV") + " " + r("MV") + " " + r("X1"));
  a.op("SUB " + r("K") + " " + r("K") + " " + r("ONE"));
  a.op("JMP pow1");
  a.label("pow1_done");
  a.op("COPY " + r("K") + " " + r("E2"));
  a.label("pow2");
  a.op("BRANCH " + r("K") + " pow2_done pow2_done pow2_body");
  a.label("pow2_body");
  a.op("MUL " + r("MV") + " " + r("MV") + " " + r("X2"));
  a.op("SUB " + r("K") + " " + r("K") + " " + r("ONE"));
  a.op("JMP pow2");
  a.label("pow2_done");
  a.op("ADD " + r("ACC") + " " + r("ACC") + " " + r("MV"));
  a.op("BRANCH " + r("E1") + " new_row new_row in_row");
  a.label("in_row");
  a.op("SUB " + r("E1") + " " + r("E1") + " " + r("ONE"));
  a.op("ADD " + r("E2") + " " + r("E2") + " " + r("ONE"));
  a.op("JMP monomial_done");
  a.label("new_row");
  a.op("ADD " + r("E1") + " " + r("E2") + " " + r("ONE"));
  a.op("CONST " + r("E2") + " 0");
  a.label("monomial_done");
  a.op("ADD " + r("J") + " " + r("J") + " " + r("ONE"));
  a.op("JMP m_loop");
  a.label("m_end");
  a.op("BRANCH " + r("ACC") + " forward found forward");
  a.label("found");
  a.op("OUTPUT " + r("COUNT") + ".." + r("COUNT"));
  a.label("forward");
  t.right();
  a.op("BRANCH " + f + " advance advance forward");
  a.label("advance");
  a.op("ADD " + r("COUNT") + " " + r("COUNT") + " " + r("ONE"));
  emit_next_sequence(a, t, "main");
  emit_decode(a, r, "d_", "decoded", "", "");
  return a.text();
}

std::string oracle_toy_src() {
  Asm a("oracle_toy", 2);
  a.comment("1 iff the oracle accepts the 1-tuple (x2)");
  a.op("ORACLE c1..c1 yes no");
  a.label("yes");
  a.op("CONST c2 1");
  a.op("OUTPUT c2..c2");
  a.label("no");
  a.op("CONST c2 0");
  a.op("OUTPUT c2..c2");
  return a.text();
}

std::string const_zero_src() {
  Asm a("const_zero", 2);
  a.op("CONST c2 0");
  a.op("OUTPUT c2..c2");
  return a.text();
}

std::string diagonal_eq_src() {
  Asm a("diagonal_eq", 2);
  a.op("SUB c2 c0 c1");
  a.op("BRANCH c2 no yes no");
  a.label("yes");
  a.op("CONST c3 1");
  a.op("OUTPUT c3..c3");
  a.label("no");
  a.op("CONST c3 0");
  a.op("OUTPUT c3..c3");
  return a.text();
}

std::string shifted_square_src() {
  Asm a("shifted_square", 1);
  a.comment("(x+1)^2");
  a.op("CONST c1 1");
  a.op("ADD c1 c0 c1");
  a.op("MUL c1 c1 c1");
  a.op("OUTPUT c1..c1");
  return a.text();
}

} // namespace

const std::vector<StdlibInfo> &stdlib_entries() {
  static const std::vector<StdlibInfo> entries = {
      {"sgn", 1, {}, {}, "sign of x: -1, 0 or 1"},
      {"positive", 1, {}, {}, "1 iff x > 0, else 0"},
      {"interval_member", 1, {"a", "b"}, {Rational(1, 2), Rational(1)}, "1 iff a <= x <= b"},
      {"even_zeros", 1, {}, {}, "1 iff the binary expansion of x in (0,1) starts with an even number of zeros"},
      {"reciprocal", 1, {"a"}, {Rational(1)}, "1/(x-a); loops forever at x = a"},
      {"cantor_cosemidecider", 1, {}, {}, "halts iff x is outside the Cantor set"},
      {"q_enumerator", 1, {}, {}, "n-th rational of the fixed enumeration"},
      {"qx_enumerator", 1, {}, {}, "n-th polynomial of the fixed enumeration, leading coefficient first"},
      {"algebraic_semidecider", 1, {}, {}, "halts iff x is algebraic"},
      {"dependence", 2, {}, {}, "halts iff (x1, x2) satisfies a nonzero rational polynomial"},
      {"oracle_toy", 2, {}, {}, "1 iff the oracle accepts (x2)"},
      {"const_zero", 2, {}, {}, "always 0"},
      {"diagonal_eq", 2, {}, {}, "1 iff x1 = x2"},
      {"shifted_square", 1, {}, {}, "(x+1)^2"},
  };
  return entries;
}

const StdlibInfo &stdlib_info(const std::string &name) {
  for (const auto &e : stdlib_entries())
    if (e.name == name)
      return e;
  throw PreconditionError("unknown stdlib entry '" + name + "'");
}

std::string stdlib_source(const std::string &name, const std::vector<Rational> &params) {
  const auto &info = stdlib_info(name);
  std::vector<Rational> p = params.empty() ? info.default_params : params;
  if (p.size() != info.param_names.size())
    throw PreconditionError("'" + name + "' takes " + std::to_string(info.param_names.size()) +
                            " parameter(s)");
  if (name == "sgn") return sgn_src();
  if (name == "positive") return positive_src();
  if (name == "interval_member") return interval_member_src(p);
  if (name == "even_zeros") return even_zeros_src();
  if (name == "reciprocal") return reciprocal_src(p);
  if (name == "cantor_cosemidecider") return cantor_cosemidecider_src();
  if (name == "q_enumerator") return q_enumerator_src();
  if (name == "qx_enumerator") return qx_enumerator_src();
  if (name == "algebraic_semidecider") return algebraic_semidecider_src();
  if (name == "dependence") return dependence_src();
  if (name == "oracle_toy") return oracle_toy_src();
  if (name == "const_zero") return const_zero_src();
  if (name == "diagonal_eq") return diagonal_eq_src();
  return shifted_square_src();
}

Program stdlib_program(const std::string &name, const std::vector<Rational> &params) {
  return parse_program(stdlib_source(name, params));
}

} // namespace bss
