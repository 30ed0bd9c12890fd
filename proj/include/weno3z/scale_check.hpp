#pragma once
// End-to-end scale-independence checks on the Shu-Osher problem: rerun with
// scaled dependent variables (or a stretched coordinate) and measure the
// max-norm deviation of the rescaled result from the original.

#include <string>

#include "weno3z/weight_engine.hpp"

namespace weno3z {

enum class ScaleMode { Variable, Length };

struct ScaleCheckResult {
  SchemeTag scheme = SchemeTag::ZM3;
  ScaleMode mode = ScaleMode::Variable;
  double deviation = 0.0;  // max over cells and over (rho, p) after rescale
  bool completed = true;   // false if either run aborted
  std::string failure;
};

/// Variable mode: initial rho and p scaled by r_var = 1/10, 400 cells,
/// fixed dt = 0.0015.  Length mode: coordinates scaled by r_dx = 100,
/// 400 cells, CFL = 0.06.  Both run to t = 1.8 (scaled accordingly).
ScaleCheckResult scale_independence_check(const SchemeSpec& scheme,
                                          ScaleMode mode);

}  // namespace weno3z
