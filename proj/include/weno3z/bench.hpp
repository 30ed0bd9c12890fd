#pragma once
// Relative cost measurement: wall time of a fixed number of 2-D Riemann
// steps per scheme, normalized so WENO3-JS costs 100.

#include <string>
#include <vector>

#include "weno3z/weight_engine.hpp"

namespace weno3z {

struct TimingRow {
  SchemeTag scheme;
  double seconds = 0.0;
  double relative = 0.0;  // js3 = 100
};

/// Runs `steps` steps of the 2-D Riemann problem on an n x n grid for each
/// scheme.  JS3 is appended automatically if absent (it is the reference).
std::vector<TimingRow> relative_timing(const std::vector<SchemeSpec>& schemes,
                                       int steps = 100, int n = 240);

}  // namespace weno3z
