#pragma once

#include "bss/machine/interpreter.hpp"

#include <json.hpp>
#include <string>

namespace bss {

std::string to_string(const Tuple &t);

/// One line per step: `step pc instr writes=[...] branch=<sign|-> oracle=<query->ans|->`.
std::string format_trace(const Program &p, const RunResult &r);
/// Status line plus output tuple or fault kind.
std::string format_result(const RunResult &r);

nlohmann::json to_json(const AlgebraicNumber &a);
nlohmann::json to_json(const Tuple &t);
/// Matches docs/schemas/run.schema.json.
nlohmann::json run_to_json(const Program &p, const RunResult &r);

} // namespace bss
