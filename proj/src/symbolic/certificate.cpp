#include "bss/symbolic/certificate.hpp"

#include "bss/errors.hpp"

#include <random>

namespace bss {

namespace {

std::vector<RatInterval> box_around(const Tuple &center, const Rational &eps) {
  std::vector<RatInterval> box;
  for (const auto &c : center) {
    RatInterval e = c.enclosure(eps / 16);
    box.emplace_back(e.lo() - eps, e.hi() + eps);
  }
  return box;
}

} // namespace

EpsilonCertificate epsilon_certificate(const std::vector<RationalFunction> &F, const Tuple &center,
                                       unsigned max_halvings) {
  for (const auto &f : F) {
    if (f.arity() != center.size())
      throw PreconditionError("function arity does not match the center");
    AlgebraicNumber v;
    try {
      v = rf_eval(f, center);
    } catch (const PoleError &) {
      throw PreconditionError(to_string(f) + " has a pole at the center");
    }
    if (sign_at(v) == 0)
      throw PreconditionError(to_string(f) + " vanishes at the center");
  }
  EpsilonCertificate cert;
  cert.center = center;
  cert.functions = F;
  Rational eps(1);
  for (unsigned h = 0; h <= max_halvings; ++h, eps /= 2) {
    auto box = box_around(center, eps);
    std::vector<std::pair<RatInterval, RatInterval>> enc;
    bool good = true;
    for (const auto &f : F) {
      RatInterval n = interval_eval(f.numerator(), box), d = interval_eval(f.denominator(), box);
      if (!n.excludes_zero() || !d.excludes_zero()) {
        good = false;
        break;
      }
      enc.emplace_back(n, d);
    }
    if (good) {
      cert.epsilon = eps;
      cert.box = std::move(box);
      cert.enclosures = std::move(enc);
      return cert;
    }
  }
  throw CertificateFailure("no certified epsilon after " + std::to_string(max_halvings) + " halvings");
}

bool check_certificate(const EpsilonCertificate &cert) {
  if (cert.epsilon <= 0 || cert.box.size() != cert.center.size())
    return false;
  for (std::size_t i = 0; i < cert.center.size(); ++i) {
    RatInterval c = cert.center[i].enclosure(cert.epsilon / 16);
    if (!cert.box[i].contains(RatInterval(c.lo() - cert.epsilon, c.hi() + cert.epsilon)))
      return false;
  }
  for (const auto &f : cert.functions)
    if (!interval_eval(f.numerator(), cert.box).excludes_zero() ||
        !interval_eval(f.denominator(), cert.box).excludes_zero())
      return false;
  return true;
}

NeighborhoodReport verify_neighborhood(const Program &p, const Oracle &oracle,
                                       const SymbolicTrace &trace, const EpsilonCertificate &cert,
                                       std::size_t samples, std::uint64_t seed, std::size_t budget) {
  if (trace.status != RunStatus::Halted)
    throw PreconditionError("verify_neighborhood needs a halted trace");
  if (budget == 0)
    budget = 10 * trace.step_count + 1000;
  std::vector<int> center_signs;
  for (const auto &f : cert.functions)
    center_signs.push_back(sign_at(rf_eval(f, cert.center)));
  // Points c' + eps * (2k/G - 1) with [c', c''] a tight enclosure of the
  // center, clipped so they stay within distance eps of the exact center.
  const long grid = 1L << 20;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> pick(0, grid);
  NeighborhoodReport report;
  for (std::size_t s = 0; s < samples; ++s) {
    SampleResult res;
    for (const auto &c : cert.center) {
      RatInterval e = c.enclosure(cert.epsilon / 1024);
      Rational lo = e.hi() - cert.epsilon, hi = e.lo() + cert.epsilon;
      res.point.emplace_back(Rational(lo + (hi - lo) * Rational(pick(rng), grid)));
    }
    RunResult run = run_concrete(p, res.point, oracle, {budget, false});
    res.same_path = run.status == RunStatus::Halted && run.history == trace.history;
    try {
      if (run.status == RunStatus::Halted && run.output.size() == trace.output_functions.size()) {
        res.same_output = true;
        for (std::size_t i = 0; i < run.output.size(); ++i)
          res.same_output = res.same_output && rf_eval(trace.output_functions[i], res.point) == run.output[i];
      }
      res.same_signs = true;
      for (std::size_t i = 0; i < cert.functions.size(); ++i)
        res.same_signs = res.same_signs && sign_at(rf_eval(cert.functions[i], res.point)) == center_signs[i];
    } catch (const Error &e) {
      res.detail = e.what();
    }
    if (res.detail.empty() && !res.same_path)
      res.detail = "path differs (" + to_string(run.status) + ")";
    else if (res.detail.empty() && !res.same_output)
      res.detail = "output differs";
    else if (res.detail.empty() && !res.same_signs)
      res.detail = "sign differs";
    report.passed += res.pass() ? 1 : 0;
    report.samples.push_back(std::move(res));
  }
  return report;
}

} // namespace bss
