#pragma once

#include "bss/exact/rational.hpp"

namespace bss {

/// 1 iff 0 < x < 1 and 2^-(2m+1) <= x <= 2^-2m for some m >= 0.
int even_zeros_truth(const Rational &x);

} // namespace bss
