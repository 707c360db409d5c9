#include "bss/witness/even_zeros.hpp"

namespace bss {

int even_zeros_truth(const Rational &x) {
  if (x <= 0 || x >= 1)
    return 0;
  Rational hi(1);
  while (hi >= x) {
    Rational lo = hi / 2;
    if (lo <= x)
      return 1;
    hi = lo / 2;
  }
  return 0;
}

} // namespace bss
