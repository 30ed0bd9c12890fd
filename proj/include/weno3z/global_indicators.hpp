#pragma once
// Global smoothness indicators tau for the Z-type weight families, plus the
// generic quadratic-form builder tau*.

#include <cassert>
#include <cmath>

#include "weno3z/stencil_kernels.hpp"

namespace weno3z {

enum class TauKind {
  Tau3,    // |beta0^(2) - beta1^(2)|                       (3-point window)
  TauN,    // (10/12) (d2o2)^2                              (3-point window)
  TauF3,   // ( 2/12) (d2o2)^2                              (3-point window)
  TauP,    // ( 3/12) (d2o2)^2                              (3-point window)
  TauCP1,  // (1/4)|(-f2+3f1+21f0-23fm1)(f2-3f1+3f0-fm1)|   (4-point window)
  TauCP2,  // c (d4o2)^2                                    (5-point window)
};

/// Factored evaluation of tau_CP1 on {f_{j-1}, f_j, f_{j+1}, f_{j+2}}.
inline double tau_cp1_factored(const StencilWindow& w) {
  const double lhs =
      -w.at(2) + 3.0 * w.at(1) + 21.0 * w.at(0) - 23.0 * w.at(-1);
  const double rhs = finite_delta(w, DeltaTag::D3O1);
  return 0.25 * std::fabs(lhs * rhs);
}

/// Combination form of tau_CP1; algebraically identical to the factored
/// form, kept for cross-checking only.
inline double tau_cp1_combination(const StencilWindow& w) {
  const double d13 = finite_delta(w, DeltaTag::D1O3);
  const double d22 = finite_delta(w, DeltaTag::D2O2);
  const double d31 = finite_delta(w, DeltaTag::D3O1);
  return std::fabs(d13 * d31 - 3.0 * d22 * d31 + 0.75 * d31 * d31);
}

/// Global smoothness indicator of the requested kind.  `cp2_scale` is the
/// free positive parameter of the TauCP2 family and is ignored otherwise.
/// TauN/TauF3/TauP use their reduced second-difference forms; the
/// definitional beta combinations agree with them identically and are
/// exercised in tests.
inline double tau(const StencilWindow& w, TauKind kind, double cp2_scale = 1.0) {
  switch (kind) {
    case TauKind::Tau3:
      return std::fabs(smoothness_beta(w, 2, 0) - smoothness_beta(w, 2, 1));
    case TauKind::TauN: {
      const double d = finite_delta(w, DeltaTag::D2O2);
      return (10.0 / 12.0) * d * d;
    }
    case TauKind::TauF3: {
      const double d = finite_delta(w, DeltaTag::D2O2);
      return (2.0 / 12.0) * d * d;
    }
    case TauKind::TauP: {
      const double d = finite_delta(w, DeltaTag::D2O2);
      return (3.0 / 12.0) * d * d;
    }
    case TauKind::TauCP1:
      return tau_cp1_factored(w);
    case TauKind::TauCP2: {
      assert(cp2_scale > 0.0);
      const double d = finite_delta(w, DeltaTag::D4O2);
      return cp2_scale * d * d;
    }
  }
  return 0.0;  // unreachable
}

/// Coefficients of the generic 3-point quadratic-form indicator
///   tau* = |a1 (f_j-f_{j-1})^2 + a2 (f_{j+1}-f_j)^2
///           + a3 (f_{j+1}-f_{j-1})^2 + b (f_{j+1}-2f_j+f_{j-1})^2|.
struct TauStarCoeffs {
  double a1 = 0.0;
  double a2 = 0.0;
  double a3 = 0.0;
  double b = 0.0;
};

inline double tau_star(const StencilWindow& w, const TauStarCoeffs& c) {
  const double dl = w.at(0) - w.at(-1);
  const double dr = w.at(1) - w.at(0);
  const double dc = finite_delta(w, DeltaTag::D1O2);
  const double d2 = finite_delta(w, DeltaTag::D2O2);
  return std::fabs(c.a1 * dl * dl + c.a2 * dr * dr + c.a3 * dc * dc +
                   c.b * d2 * d2);
}

}  // namespace weno3z
