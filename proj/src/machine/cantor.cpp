#include "bss/machine/cantor.hpp"

#include <set>

namespace bss {

bool cantor_membership(const Rational &x) {
  if (x < 0 || x > 1)
    return false;
  const Rational third(1, 3), two_thirds(2, 3);
  std::set<Rational> seen;
  Rational y = x;
  // Shift one ternary digit per round. 1/3 and 2/3 sit on the closed
  // remaining intervals (0.0222... and 0.2), so they keep going.
  while (seen.insert(y).second) {
    if (y <= third)
      y *= 3;
    else if (y >= two_thirds)
      y = 3 * y - 2;
    else
      return false;
  }
  return true;
}

} // namespace bss
