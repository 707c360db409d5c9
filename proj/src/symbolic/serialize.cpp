#include "bss/symbolic/serialize.hpp"

#include "bss/machine/trace_io.hpp"

#include <sstream>

namespace bss {

namespace {

std::string sign_text(int s) { return s < 0 ? "<0" : s == 0 ? "=0" : ">0"; }

nlohmann::json functions_json(const std::vector<RationalFunction> &fs) {
  auto j = nlohmann::json::array();
  for (const auto &f : fs)
    j.push_back(to_json(f));
  return j;
}

nlohmann::json interval_json(const RatInterval &i) { return {to_string(i.lo()), to_string(i.hi())}; }

nlohmann::json condition_json(const PathCondition &c) {
  nlohmann::json j;
  j["constraints"] = nlohmann::json::array();
  for (const auto &k : c.constraints)
    j["constraints"].push_back({{"f", to_json(k.f)}, {"sign", k.sign}});
  j["oracle"] = nlohmann::json::array();
  for (const auto &a : c.oracle_assumptions)
    j["oracle"].push_back({{"query", functions_json(a.query)}, {"answer", a.answer}});
  return j;
}

std::string tuple_text(const std::vector<RationalFunction> &fs) {
  std::string s = "(";
  for (std::size_t i = 0; i < fs.size(); ++i)
    s += (i ? ", " : "") + to_string(fs[i]);
  return s + ")";
}

} // namespace

nlohmann::json to_json(const RationalFunction &f) { return to_string(f); }

nlohmann::json shadow_to_json(const SymbolicTrace &t, const FieldBoundaryReport &fb) {
  nlohmann::json j;
  j["program"] = t.program;
  j["input"] = to_json(t.input);
  j["status"] = to_string(t.status);
  j["steps"] = t.step_count;
  if (t.fault)
    j["fault"] = to_string(*t.fault);
  if (t.status == RunStatus::Halted) {
    j["output"] = to_json(t.output);
    j["output_functions"] = functions_json(t.output_functions);
  }
  j["trace"] = nlohmann::json::array();
  for (const auto &s : t.steps) {
    nlohmann::json w = nlohmann::json::array();
    for (const auto &x : s.writes)
      w.push_back({{"cell", x.cell}, {"value", to_json(x.value)}, {"f", to_json(x.f)}});
    j["trace"].push_back({{"pc", s.pc}, {"writes", w}});
  }
  j["branches"] = nlohmann::json::array();
  for (const auto &b : t.branches)
    j["branches"].push_back({{"pc", b.pc}, {"f", to_json(b.f)}, {"sign", b.sign}});
  j["oracle"] = nlohmann::json::array();
  for (const auto &o : t.oracles)
    j["oracle"].push_back({{"pc", o.pc}, {"query", functions_json(o.query)}, {"answer", o.answer},
                           {"was_constant", o.was_constant}});
  j["field_boundary"] = {{"ok", fb.ok}, {"values_checked", fb.values_checked},
                         {"all_rational", fb.all_rational}, {"problems", fb.problems}};
  return j;
}

nlohmann::json tree_to_json(const PathTree &tree) {
  nlohmann::json j;
  j["arity"] = tree.arity;
  j["nodes"] = nlohmann::json::array();
  for (const auto &n : tree.nodes) {
    nlohmann::json x;
    x["parent"] = n.parent ? nlohmann::json(*n.parent) : nlohmann::json(nullptr);
    x["children"] = n.children;
    if (!n.children.empty()) {
      x["pc"] = n.pc;
      x["labels"] = n.labels;
      if (n.f)
        x["f"] = to_json(*n.f);
      else
        x["query"] = functions_json(n.query);
    }
    x["leaf"] = n.leaf ? nlohmann::json(*n.leaf) : nlohmann::json(nullptr);
    j["nodes"].push_back(x);
  }
  j["leaves"] = nlohmann::json::array();
  for (const auto &l : tree.leaves) {
    nlohmann::json x;
    x["condition"] = condition_json(l.condition);
    x["outcome"] = to_string(l.outcome);
    if (l.fault)
      x["fault"] = to_string(*l.fault);
    x["output"] = functions_json(l.output);
    x["measure_zero"] = l.measure_zero;
    j["leaves"].push_back(x);
  }
  return j;
}

nlohmann::json certificate_to_json(const EpsilonCertificate &cert) {
  nlohmann::json j;
  j["center"] = to_json(cert.center);
  j["epsilon"] = to_string(cert.epsilon);
  j["box"] = nlohmann::json::array();
  for (const auto &b : cert.box)
    j["box"].push_back(interval_json(b));
  j["functions"] = nlohmann::json::array();
  for (std::size_t i = 0; i < cert.functions.size(); ++i)
    j["functions"].push_back({{"f", to_json(cert.functions[i])},
                              {"numerator", interval_json(cert.enclosures[i].first)},
                              {"denominator", interval_json(cert.enclosures[i].second)}});
  return j;
}

nlohmann::json neighborhood_to_json(const NeighborhoodReport &r) {
  nlohmann::json j;
  j["samples"] = r.samples.size();
  j["passed"] = r.passed;
  j["ok"] = r.ok();
  j["failures"] = nlohmann::json::array();
  for (const auto &s : r.samples)
    if (!s.pass())
      j["failures"].push_back({{"point", to_json(s.point)}, {"detail", s.detail}});
  return j;
}

std::string format_shadow(const Program &p, const SymbolicTrace &t) {
  std::ostringstream out;
  for (std::size_t i = 0; i < t.steps.size(); ++i) {
    const auto &s = t.steps[i];
    out << i + 1 << " " << s.pc << " " << (s.pc < p.size() ? to_string(p.instructions[s.pc]) : "END")
        << " writes=[";
    for (std::size_t k = 0; k < s.writes.size(); ++k)
      out << (k ? ", " : "") << "c" << s.writes[k].cell << "=" << to_string(s.writes[k].f) << " ("
          << to_string(s.writes[k].value) << ")";
    out << "]\n";
  }
  for (const auto &b : t.branches)
    out << "branch pc=" << b.pc << " " << to_string(b.f) << " " << sign_text(b.sign) << "\n";
  for (const auto &o : t.oracles)
    out << "oracle pc=" << o.pc << " " << tuple_text(o.query) << " -> " << (o.answer ? "yes" : "no")
        << (o.was_constant ? " (constant)" : "") << "\n";
  out << to_string(t.status) << " steps=" << t.step_count;
  if (t.status == RunStatus::Halted)
    out << " output=" << tuple_text(t.output_functions) << " = " << to_string(t.output);
  if (t.fault)
    out << " fault=" << to_string(*t.fault);
  out << "\n";
  return out.str();
}

std::string format_condition(const PathCondition &c) {
  std::string s = "{";
  bool first = true;
  for (const auto &k : c.constraints) {
    s += (first ? "" : ", ") + to_string(k.f) + " " + sign_text(k.sign);
    first = false;
  }
  for (const auto &a : c.oracle_assumptions) {
    s += (first ? "" : ", ") + std::string(a.answer ? "" : "not ") + "oracle" + tuple_text(a.query);
    first = false;
  }
  return s + "}";
}

std::string format_tree(const PathTree &tree) {
  std::ostringstream out;
  for (std::size_t i = 0; i < tree.leaves.size(); ++i) {
    const auto &l = tree.leaves[i];
    out << "leaf " << i << " " << to_string(l.outcome);
    if (l.outcome == LeafOutcome::Halted)
      out << " output=" << tuple_text(l.output);
    if (l.fault)
      out << " fault=" << to_string(*l.fault);
    if (l.measure_zero)
      out << " measure-zero";
    out << " " << format_condition(l.condition) << "\n";
  }
  return out.str();
}

std::string format_certificate(const EpsilonCertificate &cert) {
  std::ostringstream out;
  out << "center " << to_string(cert.center) << "\n";
  out << "epsilon " << to_string(cert.epsilon) << "\n";
  for (std::size_t i = 0; i < cert.functions.size(); ++i)
    out << "  " << to_string(cert.functions[i]) << " num " << to_string(cert.enclosures[i].first)
        << " den " << to_string(cert.enclosures[i].second) << "\n";
  return out.str();
}

} // namespace bss
