#pragma once

#include "bss/exact/number_field.hpp"

#include <string>
#include <vector>

namespace bss {

using Tuple = std::vector<AlgebraicNumber>;

/// A membership predicate over tuples of machine values.
struct Oracle {
  enum class Kind { Rationals, Algebraic, DegreeEq, DegreeLeq, Cantor, FiniteSet, Empty };

  Kind kind = Kind::Empty;
  std::size_t degree = 0;   // DegreeEq / DegreeLeq
  std::vector<Tuple> set;   // FiniteSet
  /// Answer assumed for symbolic queries on nonconstant tuples.
  bool generic_policy = false;

  static Oracle make(Kind k, std::size_t d = 0, std::vector<Tuple> tuples = {}) {
    Oracle o;
    o.kind = k;
    o.degree = d;
    o.set = std::move(tuples);
    return o;
  }
  static Oracle rationals() { return make(Kind::Rationals); }
  static Oracle algebraic() { return make(Kind::Algebraic); }
  static Oracle degree_eq(std::size_t d) { return make(Kind::DegreeEq, d); }
  static Oracle degree_leq(std::size_t d) { return make(Kind::DegreeLeq, d); }
  static Oracle cantor() { return make(Kind::Cantor); }
  static Oracle finite(std::vector<Tuple> tuples) { return make(Kind::FiniteSet, 0, std::move(tuples)); }
  static Oracle empty() { return make(Kind::Empty); }
};

/// Exact membership. Every representable value is algebraic, so Algebraic
/// always answers true. Throws OracleUnsupported for degree oracles on
/// tuples longer than 1 and for Cantor on non-rational or long tuples.
bool oracle_query(const Oracle &oracle, const Tuple &t);

std::string to_string(const Oracle &oracle);

} // namespace bss
