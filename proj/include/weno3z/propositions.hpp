#pragma once
// Randomized checks of the weight-ratio monotonicity propositions.  Each
// sample draws (tau, beta_C, beta_D, p or c pairs) inside the proposition's
// admissible domain and verifies the stated ordering of the normalized
// weight ratios omega_D/omega_C.

#include <cstdint>
#include <string>
#include <vector>

namespace weno3z {

struct PropositionReport {
  int prop_id = 0;
  long samples = 0;
  long violations = 0;
  std::vector<std::string> counterexamples;  // formatted verbatim, capped
};

/// Run `sample_count` seeded samples of proposition 1..4.
PropositionReport proposition_check(int prop_id, long sample_count,
                                    std::uint64_t seed = 20240801);

}  // namespace weno3z
