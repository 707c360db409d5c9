#pragma once

#include "bss/exact/interval.hpp"
#include "bss/exact/unipoly.hpp"

#include <vector>

namespace bss {

/// Sturm chain of the squarefree part of a nonzero polynomial.
class SturmSequence {
public:
  explicit SturmSequence(const UniPoly &p);

  const UniPoly &poly() const { return chain_.front(); }
  int sign_changes(const Rational &x) const;
  /// Number of distinct real roots in (a, b]; requires a < b.
  int count_roots(const Rational &a, const Rational &b) const;

private:
  std::vector<UniPoly> chain_;
};

/// Strict bound: every real root r of p satisfies |r| < root_bound(p).
Rational root_bound(const UniPoly &p);

/// Disjoint isolating intervals, sorted, one per distinct real root of p.
/// Endpoints are never roots. Throws PreconditionError for p = 0.
std::vector<RatInterval> sturm_isolate(const UniPoly &p);

/// Bisects an isolating interval of a root of sturm.poly() until its width
/// is at most max_width. Each half is kept only after a Sturm count of 1.
RatInterval refine_root(const SturmSequence &sturm, RatInterval interval,
                        const Rational &max_width);

} // namespace bss
