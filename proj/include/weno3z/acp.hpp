#pragma once
// Accuracy probes for smoothness quantities near critical points placed at
// x_j + lambda*dx (inside the cell, not only on the node).  The probe
// samples a synthetic profile with a critical point of the requested order
// on a dyadic ladder of spacings and fits the log2 slope of the quantity.

#include <cstdint>
#include <string>
#include <vector>

namespace weno3z {

enum class ProbeQuantity {
  Beta2_0,   // beta0^(2)
  Beta2_1,   // beta1^(2)
  Beta3_0,   // beta0^(3)
  Beta3_2,   // beta2^(3)
  Tau3,
  TauN,
  TauCP1,
  TauCP2,
  D22Sq,     // (delta^(2)2)^2
  D42Sq,     // (delta^(4)2)^2
};

const char* probe_quantity_name(ProbeQuantity q);

struct OrderProbeResult {
  ProbeQuantity quantity;
  double lambda = 0.0;
  int cp_order = 0;     // 0, 1 or 2
  double slope = 0.0;   // fitted log2 slope vs dx
  double residual = 0.0;  // max deviation of the fit from the data
  bool conclusive = true;
};

/// Fit the refinement slope of `quantity` with a CP of order `cp_order` at
/// lambda inside the cell.  Three independent random draws (seeded) must
/// agree within 0.3 or the probe reports inconclusive.
OrderProbeResult acp_order_probe(ProbeQuantity quantity, double lambda,
                                 int cp_order, std::uint64_t seed = 12345);

}  // namespace weno3z
