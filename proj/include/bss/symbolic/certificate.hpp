#pragma once

#include "bss/symbolic/shadow.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace bss {

/// Proof that every function in F keeps its sign on the box center +- epsilon:
/// the enclosures of each numerator and denominator over the box exclude 0.
struct EpsilonCertificate {
  Tuple center;
  Rational epsilon;
  std::vector<RatInterval> box; // rational box containing center +- epsilon
  std::vector<RationalFunction> functions;
  std::vector<std::pair<RatInterval, RatInterval>> enclosures; // (numerator, denominator)
};

/// Tries epsilon = 1, 1/2, 1/4, ... and returns the first certified one.
/// Throws PreconditionError when some f vanishes (or has a pole) at the center,
/// CertificateFailure after max_halvings unsuccessful halvings.
EpsilonCertificate epsilon_certificate(const std::vector<RationalFunction> &F, const Tuple &center,
                                       unsigned max_halvings = 64);

/// Re-checks a certificate's enclosures from scratch.
bool check_certificate(const EpsilonCertificate &cert);

struct SampleResult {
  Tuple point;
  bool same_path = false;
  bool same_output = false;
  bool same_signs = false; // every f in F has the sign it has at the center
  std::string detail;
  bool pass() const { return same_path && same_output && same_signs; }
};

struct NeighborhoodReport {
  std::vector<SampleResult> samples;
  std::size_t passed = 0;
  bool ok() const { return passed == samples.size(); }
};

/// Runs the program on `samples` rational points drawn uniformly from a grid
/// inside the certified box and compares each run's branch and oracle history
/// and its output with the trace's output functions, exactly.
NeighborhoodReport verify_neighborhood(const Program &p, const Oracle &oracle,
                                       const SymbolicTrace &trace, const EpsilonCertificate &cert,
                                       std::size_t samples, std::uint64_t seed,
                                       std::size_t budget = 0);

} // namespace bss
