#pragma once
// Run bookkeeping: per-run statistics and the structured robustness-failure
// record emitted when a solve blows up.

#include <limits>
#include <stdexcept>
#include <string>

namespace weno3z {

struct FailureRecord {
  std::string case_name;
  std::string scheme;
  long step = 0;
  double time = 0.0;
  std::string cell;  // "i" in 1-D, "i,j" in 2-D
  std::string reason;

  std::string line() const {
    return "FAIL case=" + case_name + " scheme=" + scheme +
           " step=" + std::to_string(step) + " time=" + std::to_string(time) +
           " cell=" + cell + " reason=" + reason;
  }
};

/// Thrown out of advance(); carries the full failure record.
struct SolverAbort : std::runtime_error {
  FailureRecord record;
  explicit SolverAbort(FailureRecord rec)
      : std::runtime_error(rec.line()), record(std::move(rec)) {}
};

struct RunStats {
  long steps = 0;
  double min_rho = std::numeric_limits<double>::infinity();
  double min_p = std::numeric_limits<double>::infinity();
};

}  // namespace weno3z
