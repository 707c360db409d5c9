#pragma once

#include "bss/exact/multipoly.hpp"
#include "bss/exact/unipoly.hpp"

#include <cstddef>
#include <utility>
#include <vector>

namespace bss {

/// The fixed enumeration of Q: 0 first, then reduced p/q by height p + q,
/// ties by increasing p, each value followed by its negation:
/// 0, 1, -1, 1/2, -1/2, 2, -2, 1/3, -1/3, 3, -3, 1/4, ...
Rational rational_at(std::size_t index);
std::size_t rational_index(const Rational &q);

/// Index sequences (a_k, ..., a_0) in enumeration order, starting from (0).
/// Successor: if a_0 > 0, decrement it and append 0; otherwise pop the t
/// trailing zeros, then decrement the new last entry and append t (or
/// become (t) when nothing is left).
using IndexSequence = std::vector<std::size_t>;
void next_sequence(IndexSequence &s);
IndexSequence sequence_at(std::size_t index);

/// The polynomial named by a sequence: coefficient of X^j is
/// rational_at(a_j), except the leading one which is rational_at(a_k + 1).
UniPoly polynomial_of(const IndexSequence &s);
UniPoly polynomial_at(std::size_t index);

/// Graded order of monomials in two variables: 1, Y1, Y2, Y1^2, Y1Y2, Y2^2, ...
std::pair<unsigned, unsigned> monomial_at(std::size_t j);
/// Same sequence convention, with a_j the coefficient of the j-th monomial.
MultiPoly bivariate_of(const IndexSequence &s);
MultiPoly bivariate_at(std::size_t index);

} // namespace bss
