#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace heckelab {

struct VerifyFailure {
  int index = 0;        // position in the generation stream; with the seed
                        // this reproduces the counterexample exactly
  std::string detail;
};

struct SuiteResult {
  std::string suite;
  std::uint64_t seed = 0;
  int requested = 0;
  int checked = 0;
  std::vector<VerifyFailure> failures;

  bool passed() const { return failures.empty() && checked == requested; }
};

// Random bundles, random proper sub rank: the double Hecke transform must
// shift every splitting exponent by exactly +1.
SuiteResult run_involution_suite(int count, std::uint64_t seed);

// Random bundles: optimize terminates within ceil(phi_0) steps, lands on
// phi = 0, and loses at least one unit of phi per step.
SuiteResult run_descent_suite(int count, std::uint64_t seed);

// Random bundles: the Birkhoff splitting of the restriction equals the
// splitting recovered from the h^0 staircase, and the factorization
// reconstructs the transition exactly.
SuiteResult run_oracle_suite(int count, std::uint64_t seed);

// Random profiles: phi * (total rank)! is a nonnegative integer, the 4-term
// bound dominates every block transform, gr_tilde lands in phi < 1 and is
// idempotent, rank/degree bookkeeping is conserved, profiles with phi < 1
// keep every bound below 1, and two-block twists land in the unit window.
SuiteResult run_discreteness_suite(int count, std::uint64_t seed);

}  // namespace heckelab
