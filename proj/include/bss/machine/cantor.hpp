#pragma once

#include "bss/exact/rational.hpp"

namespace bss {

/// True iff x lies in [0,1] and has a ternary expansion using only 0 and 2.
bool cantor_membership(const Rational &x);

} // namespace bss
