#pragma once

#include "bss/exact/rational.hpp"

#include <json.hpp>
#include <string>

namespace bss {

/// x = c1 + c2/2 with c1 and c2 in the Cantor set.
struct CantorPair {
  Rational c1;
  Rational c2;
  std::size_t digits_used = 0;
  // Ternary expansions, repeating block in parentheses: "0.22(01)".
  std::string x_digits;
  std::string c1_digits;
  std::string c2_digits;
};

/// Splits each ternary digit of x in [0, 1]: 0 -> (0, 0), 2 -> (2, 0),
/// 1 -> (0, 2). Periodic expansions are summed in closed form. Throws
/// PreconditionError outside [0, 1] and Error when the expansion has not
/// terminated or repeated within digit_budget digits.
CantorPair cantor_decompose(const Rational &x, std::size_t digit_budget = 1000);

nlohmann::json cantor_pair_to_json(const Rational &x, const CantorPair &p);

} // namespace bss
