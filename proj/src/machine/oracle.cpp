#include "bss/machine/oracle.hpp"

#include "bss/errors.hpp"
#include "bss/machine/cantor.hpp"

namespace bss {

namespace {

const AlgebraicNumber &single(const Tuple &t, const char *what) {
  if (t.size() != 1)
    throw OracleUnsupported(std::string(what) + " oracle takes 1-tuples, got length " +
                            std::to_string(t.size()));
  return t[0];
}

} // namespace

bool oracle_query(const Oracle &oracle, const Tuple &t) {
  switch (oracle.kind) {
  case Oracle::Kind::Rationals:
    for (const auto &v : t)
      if (!v.is_rational())
        return false;
    return true;
  case Oracle::Kind::Algebraic:
    return true;
  case Oracle::Kind::DegreeEq:
    return degree_over_q(single(t, "degree")) == oracle.degree;
  case Oracle::Kind::DegreeLeq:
    return degree_over_q(single(t, "degree")) <= oracle.degree;
  case Oracle::Kind::Cantor: {
    auto q = single(t, "cantor").as_rational();
    if (!q)
      throw OracleUnsupported("cantor oracle needs a rational value");
    return cantor_membership(*q);
  }
  case Oracle::Kind::FiniteSet:
    for (const auto &member : oracle.set) {
      if (member.size() != t.size())
        continue;
      bool eq = true;
      for (std::size_t i = 0; i < t.size() && eq; ++i) {
        try {
          eq = (t[i] - member[i]).is_zero();
        } catch (const FieldMismatch &) {
          eq = false; // irrational values of different fields
        }
      }
      if (eq)
        return true;
    }
    return false;
  case Oracle::Kind::Empty:
    return false;
  }
  return false;
}

std::string to_string(const Oracle &oracle) {
  switch (oracle.kind) {
  case Oracle::Kind::Rationals: return "rationals";
  case Oracle::Kind::Algebraic: return "algebraic";
  case Oracle::Kind::DegreeEq: return "deg=" + std::to_string(oracle.degree);
  case Oracle::Kind::DegreeLeq: return "degle=" + std::to_string(oracle.degree);
  case Oracle::Kind::Cantor: return "cantor";
  case Oracle::Kind::FiniteSet: return "finite(" + std::to_string(oracle.set.size()) + ")";
  case Oracle::Kind::Empty: return "empty";
  }
  return "?";
}

} // namespace bss
