#include "bss/exact/sturm.hpp"

#include "bss/errors.hpp"

#include <algorithm>
#include <cstdlib>

namespace bss {

SturmSequence::SturmSequence(const UniPoly &p) {
  if (p.is_zero())
    throw PreconditionError("Sturm sequence of the zero polynomial");
  UniPoly sf = squarefree_part(p);
  chain_.push_back(sf);
  if (sf.degree() == 0)
    return;
  chain_.push_back(sf.derivative());
  while (true) {
    UniPoly r = chain_[chain_.size() - 2] % chain_.back();
    if (r.is_zero())
      break;
    chain_.push_back(-r);
  }
}

int SturmSequence::sign_changes(const Rational &x) const {
  int changes = 0, last = 0;
  for (const auto &p : chain_) {
    int s = sgn(p.eval(x));
    if (s == 0)
      continue;
    if (last != 0 && s != last)
      ++changes;
    last = s;
  }
  return changes;
}

int SturmSequence::count_roots(const Rational &a, const Rational &b) const {
  return sign_changes(a) - sign_changes(b);
}

Rational root_bound(const UniPoly &p) {
  Rational m = 0;
  for (int i = 0; i < p.degree(); ++i)
    m = std::max(m, Rational(abs(p.coeffs()[i] / p.leading())));
  return m + 1;
}

namespace {

// A split point strictly inside (a, b) that is not a root of p.
Rational split_point(const UniPoly &p, const Rational &a, const Rational &b) {
  Rational mid = (a + b) / 2;
  if (p.eval(mid) != 0)
    return mid;
  for (long k = 3;; ++k) {
    for (long j = 1; j < k; ++j) {
      Rational m = a + (b - a) * Rational(j, k);
      if (p.eval(m) != 0)
        return m;
    }
  }
}

} // namespace

std::vector<RatInterval> sturm_isolate(const UniPoly &p) {
  if (p.is_zero())
    throw PreconditionError("sturm_isolate on the zero polynomial");
  SturmSequence sturm(p);
  const UniPoly &sf = sturm.poly();
  std::vector<RatInterval> out;
  if (sf.degree() <= 0)
    return out;
  Rational bound = root_bound(sf);
  struct Pending {
    Rational a, b;
    int count;
  };
  std::vector<Pending> stack;
  stack.push_back({-bound, bound, sturm.count_roots(-bound, bound)});
  while (!stack.empty()) {
    Pending cur = stack.back();
    stack.pop_back();
    if (cur.count == 0)
      continue;
    if (cur.count == 1) {
      out.emplace_back(cur.a, cur.b);
      continue;
    }
    Rational m = split_point(sf, cur.a, cur.b);
    int left = sturm.count_roots(cur.a, m);
    stack.push_back({cur.a, m, left});
    stack.push_back({m, cur.b, cur.count - left});
  }
  std::sort(out.begin(), out.end(),
            [](const RatInterval &x, const RatInterval &y) { return x.lo() < y.lo(); });
  return out;
}

RatInterval refine_root(const SturmSequence &sturm, RatInterval interval,
                        const Rational &max_width) {
  const UniPoly &p = sturm.poly();
  while (interval.width() > max_width) {
    Rational a = interval.lo(), b = interval.hi();
    Rational m = (a + b) / 2;
    if (p.eval(m) == 0)
      return RatInterval(m);
    if (sturm.count_roots(a, m) == 1)
      interval = RatInterval(a, m);
    else if (sturm.count_roots(m, b) == 1)
      interval = RatInterval(m, b);
    else
      throw Error("refine_root: interval does not isolate a root");
  }
  return interval;
}

} // namespace bss
