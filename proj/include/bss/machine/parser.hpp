#pragma once

#include "bss/machine/program.hpp"

#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace bss {

/// Named number fields that value literals like "sqrt2:(a,b)" refer to.
/// "Q" and "sqrt2" are always present.
class FieldRegistry {
public:
  FieldRegistry();
  void add(const std::string &name, FieldPtr field);
  /// Parses "[name=]minpoly;lo;hi" and registers the field. Returns it.
  FieldPtr add_spec(const std::string &spec);
  FieldPtr find(const std::string &name) const;

private:
  std::map<std::string, FieldPtr> fields_;
};

/// A rational literal or a field element literal "name:(c0,c1,...)".
AlgebraicNumber parse_value(std::string_view text, const FieldRegistry &fields);
/// "(v1, v2, ...)"; "()" is the empty tuple.
std::vector<AlgebraicNumber> parse_tuple(std::string_view text, const FieldRegistry &fields);

Program parse_program(std::string_view text, const FieldRegistry &fields = FieldRegistry());

} // namespace bss
