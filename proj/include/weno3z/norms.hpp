#pragma once
// Error norms used by all convergence reporting: L1 is the per-point mean
// absolute error (matches the magnitude pattern of the reference tables),
// Linf the maximum.  Summation order is fixed left-to-right so results are
// bit-reproducible.

#include <cassert>
#include <cmath>
#include <span>
#include <utility>

namespace weno3z {

struct Norms {
  double l1 = 0.0;
  double linf = 0.0;
};

inline Norms error_norms(std::span<const double> numerical,
                         std::span<const double> exact) {
  assert(numerical.size() == exact.size() && !numerical.empty());
  Norms n;
  double sum = 0.0;
  for (std::size_t i = 0; i < numerical.size(); ++i) {
    const double e = std::fabs(numerical[i] - exact[i]);
    sum += e;
    if (e > n.linf) n.linf = e;
  }
  n.l1 = sum / static_cast<double>(numerical.size());
  return n;
}

}  // namespace weno3z
