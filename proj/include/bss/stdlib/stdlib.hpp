#pragma once

#include "bss/machine/program.hpp"

#include <string>
#include <vector>

namespace bss {

struct StdlibInfo {
  std::string name;
  std::size_t arity;
  std::vector<std::string> param_names;
  std::vector<Rational> default_params;
  std::string summary;
};

const std::vector<StdlibInfo> &stdlib_entries();
const StdlibInfo &stdlib_info(const std::string &name);

/// DSL source of an entry. Empty `params` selects the defaults.
/// Throws PreconditionError for an unknown name or wrong parameter count.
std::string stdlib_source(const std::string &name, const std::vector<Rational> &params = {});
Program stdlib_program(const std::string &name, const std::vector<Rational> &params = {});

} // namespace bss
