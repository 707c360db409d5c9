#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>

namespace bss {

using Integer = mpz_class;
using Rational = mpq_class;

/// Parses "p/q" or an integer literal, with an optional leading sign.
/// The result is canonical (reduced, positive denominator).
Rational parse_rational(std::string_view text);

std::string to_string(const Rational &q);
std::string to_string(const Integer &z);

inline int sign(const Rational &q) { return sgn(q); }
inline bool is_integer(const Rational &q) { return q.get_den() == 1; }

Integer floor(const Rational &q);

/// Exact m-th root of q when q is a perfect m-th power in Q.
std::optional<Rational> exact_root(const Rational &q, unsigned long m);

Rational pow(const Rational &base, unsigned long exp);

/// The dyadic rational nearest to q with denominator 2^bits (ties away from
/// zero).
Rational round_dyadic(const Rational &q, unsigned long bits);

} // namespace bss
