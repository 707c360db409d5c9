#include "bss/machine/trace_io.hpp"

#include <sstream>

namespace bss {

std::string to_string(const Tuple &t) {
  std::string s = "(";
  for (std::size_t i = 0; i < t.size(); ++i)
    s += (i ? ", " : "") + to_string(t[i]);
  return s + ")";
}

namespace {

std::string sign_text(int s) { return s < 0 ? "-1" : s == 0 ? "0" : "+1"; }

std::string instr_at(const Program &p, std::size_t pc) {
  return pc < p.size() ? to_string(p.instructions[pc]) : "END";
}

} // namespace

std::string format_trace(const Program &p, const RunResult &r) {
  std::ostringstream out;
  for (const auto &ts : r.trace) {
    out << ts.step << " " << ts.pc << " " << instr_at(p, ts.pc) << " writes=[";
    for (std::size_t i = 0; i < ts.writes.size(); ++i)
      out << (i ? ", " : "") << "c" << ts.writes[i].first << "=" << to_string(ts.writes[i].second);
    out << "] branch=" << (ts.branch ? sign_text(*ts.branch) : "-") << " oracle=";
    if (ts.oracle)
      out << to_string(ts.oracle->first) << "->" << (ts.oracle->second ? "yes" : "no");
    else
      out << "-";
    out << "\n";
  }
  return out.str();
}

std::string format_result(const RunResult &r) {
  std::string s = to_string(r.status) + " steps=" + std::to_string(r.steps);
  if (r.status == RunStatus::Halted)
    s += " output=" + to_string(r.output);
  if (r.fault)
    s += " fault=" + to_string(*r.fault);
  return s;
}

nlohmann::json to_json(const AlgebraicNumber &a) { return to_string(a); }

nlohmann::json to_json(const Tuple &t) {
  auto j = nlohmann::json::array();
  for (const auto &v : t)
    j.push_back(to_json(v));
  return j;
}

nlohmann::json run_to_json(const Program &p, const RunResult &r) {
  nlohmann::json j;
  j["program"] = p.name;
  j["status"] = to_string(r.status);
  j["steps"] = r.steps;
  if (r.status == RunStatus::Halted)
    j["output"] = to_json(r.output);
  if (r.fault)
    j["fault"] = to_string(*r.fault);
  auto trace = nlohmann::json::array();
  for (const auto &ts : r.trace) {
    nlohmann::json s;
    s["step"] = ts.step;
    s["pc"] = ts.pc;
    s["instr"] = instr_at(p, ts.pc);
    auto writes = nlohmann::json::array();
    for (const auto &[cell, v] : ts.writes)
      writes.push_back({{"cell", cell}, {"value", to_json(v)}});
    s["writes"] = writes;
    s["branch"] = ts.branch ? nlohmann::json(*ts.branch) : nlohmann::json(nullptr);
    if (ts.oracle)
      s["oracle"] = {{"query", to_json(ts.oracle->first)}, {"answer", ts.oracle->second}};
    else
      s["oracle"] = nullptr;
    trace.push_back(s);
  }
  j["trace"] = trace;
  return j;
}

} // namespace bss
