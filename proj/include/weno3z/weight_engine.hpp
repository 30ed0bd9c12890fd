#pragma once
// Nonlinear weight formulas for the third-order WENO family plus the
// five-point WENO5-JS reference, including the piecewise rational mapping
// used by WENO3-ZM.

#include <array>
#include <cassert>
#include <cmath>
#include <span>
#include <stdexcept>
#include <string>

#include "weno3z/stencil_kernels.hpp"

namespace weno3z {

/// Parameters of the piecewise rational mapping M^{n+1}_{n,m;m1;c1,c2,c3}.
struct MappingParams {
  int n = 2;
  int m = 1;
  int m1 = 2;  // must satisfy m1 >= m + 1
  double c1 = 1.2;
  double c2 = 0.1;
  double c3 = 55.0;
};

/// Mapping constants tuned for the two linear weights (d0 = 1/3, d1 = 2/3).
inline constexpr MappingParams kMapD0{2, 1, 2, 1.2, 0.1, 55.0};
inline constexpr MappingParams kMapD1{2, 1, 2, 1.2, 0.1, 35.0};

namespace detail {
inline double ipow(double x, int e) {
  double r = 1.0;
  for (int i = 0; i < e; ++i) r *= x;
  return r;
}
}  // namespace detail

/// Piecewise rational map: identity above c3, (n+1)-order flat at 0 below.
/// Continuous at c3 where the rational branch reduces to w^{n+1}/w^n.
inline double prm_map(double w, const MappingParams& p) {
  assert(w >= 0.0);
  assert(p.m1 >= p.m + 1 && p.c1 > 0.0 && p.c2 >= 0.0 && p.c3 > 0.0);
  if (w > p.c3) return w;
  if (w == 0.0) return 0.0;
  const double r = p.c3 - w;
  const double wn = detail::ipow(w, p.n);
  const double den =
      wn + p.c2 * w * detail::ipow(r, p.m1) + p.c1 * detail::ipow(r, p.m + 1);
  return wn * w / den;
}

enum class SchemeTag {
  JS3,     // alpha = d / (eps + beta)^2
  Z3,      // alpha = d (1 + tau3/beta)
  Z3POW,   // alpha = d (1 + tau3^{3/2}/beta)
  NP3,     // alpha = d (1 + tauN^{3/2}/beta)
  F3,      // alpha = d (1 + tauF3^{3/2}/beta)
  NN3,     // alpha = d (1 + tauN/beta^p)
  PZ3,     // alpha = d (1 + tau3/beta^p)
  PPLUS3,  // alpha = d (1 + tauP/beta + dx^{1/6} beta/tauP)
  ZM3,     // alpha = d (1 + M(tauCP1/beta)), beta = {beta0^(2), beta2^(3)}
  ZES3,    // alpha = d (1 + tauCP2/beta), beta = {beta0^(3), beta2^(3)}
  JS5,     // five-point WENO-JS reference
};

/// Scheme selector plus the (few) tunables the family exposes.
struct SchemeSpec {
  SchemeTag tag = SchemeTag::ZM3;
  double p = 0.5;          // exponent for NN3/PZ3 (Z3POW/NP3/F3 fix 3/2)
  double cp2_scale = 1.0;  // free positive scale of tauCP2 (ZES3)
  double eps = 1e-40;      // division guard added to beta (and tauP)
  MappingParams map0 = kMapD0;
  MappingParams map1 = kMapD1;

  static SchemeSpec make(SchemeTag t) {
    SchemeSpec s;
    s.tag = t;
    if (t == SchemeTag::JS3 || t == SchemeTag::JS5) s.eps = 1e-6;
    return s;
  }
};

inline const char* scheme_name(SchemeTag t) {
  switch (t) {
    case SchemeTag::JS3: return "js3";
    case SchemeTag::Z3: return "z3";
    case SchemeTag::Z3POW: return "z3pow";
    case SchemeTag::NP3: return "np3";
    case SchemeTag::F3: return "f3";
    case SchemeTag::NN3: return "nn3";
    case SchemeTag::PZ3: return "pz3";
    case SchemeTag::PPLUS3: return "p+3";
    case SchemeTag::ZM3: return "zm3";
    case SchemeTag::ZES3: return "zes3";
    case SchemeTag::JS5: return "js5";
  }
  return "?";
}

/// Points consumed left-to-right by the positive-wind reconstruction.
inline int scheme_stencil_width(const SchemeSpec& spec) {
  switch (spec.tag) {
    case SchemeTag::ZM3:
      return 4;
    case SchemeTag::ZES3:
    case SchemeTag::JS5:
      return 5;
    default:
      return 3;
  }
}

/// Index of the reference point f_j inside the positive-wind window.
inline int scheme_window_offset(const SchemeSpec& spec) {
  return scheme_stencil_width(spec) == 5 ? 2 : 1;
}

/// Number of candidate stencils (= number of weights).
inline int scheme_candidate_count(const SchemeSpec& spec) {
  return spec.tag == SchemeTag::JS5 ? 3 : 2;
}

/// Global indicator the scheme feeds into its alpha formula, if any.
inline bool scheme_uses_tau(SchemeTag t) {
  return t != SchemeTag::JS3 && t != SchemeTag::JS5;
}

/// Normalized nonlinear weights omega_k from local indicators beta_k and the
/// scheme's global indicator tau.  `dx` participates only in the WENO-P+3
/// formula (dx^{1/6} term).  Throws std::domain_error on non-finite input,
/// which signals upstream solver blow-up.
inline void nonlinear_weights(std::span<const double> betas, double tau_value,
                              double dx, const SchemeSpec& spec,
                              std::span<double> omega) {
  const int nk = scheme_candidate_count(spec);
  assert(static_cast<int>(betas.size()) == nk &&
         static_cast<int>(omega.size()) == nk);
  for (int k = 0; k < nk; ++k) {
    if (!std::isfinite(betas[static_cast<std::size_t>(k)])) {
      throw std::domain_error("nonlinear_weights: beta_" + std::to_string(k) +
                              " is not finite");
    }
  }
  if (scheme_uses_tau(spec.tag) && !std::isfinite(tau_value)) {
    throw std::domain_error("nonlinear_weights: tau is not finite");
  }

  const double* d = (nk == 3) ? table::d3 : table::d2;
  std::array<double, 3> alpha{};
  for (int k = 0; k < nk; ++k) {
    const double beta = betas[static_cast<std::size_t>(k)] + spec.eps;
    switch (spec.tag) {
      case SchemeTag::JS3:
      case SchemeTag::JS5:
        alpha[static_cast<std::size_t>(k)] = d[k] / (beta * beta);
        break;
      case SchemeTag::Z3:
        alpha[static_cast<std::size_t>(k)] = d[k] * (1.0 + tau_value / beta);
        break;
      case SchemeTag::Z3POW:
      case SchemeTag::NP3:
      case SchemeTag::F3:
        alpha[static_cast<std::size_t>(k)] =
            d[k] * (1.0 + tau_value * std::sqrt(tau_value) / beta);
        break;
      case SchemeTag::NN3:
      case SchemeTag::PZ3:
        alpha[static_cast<std::size_t>(k)] =
            d[k] * (1.0 + tau_value / std::pow(beta, spec.p));
        break;
      case SchemeTag::PPLUS3: {
        // tauP is guarded the same way as beta: the bare formula divides by
        // tauP, which vanishes on constant data.
        const double tp = tau_value + spec.eps;
        alpha[static_cast<std::size_t>(k)] =
            d[k] * (1.0 + tp / beta + std::pow(dx, 1.0 / 6.0) * beta / tp);
        break;
      }
      case SchemeTag::ZM3: {
        const MappingParams& mp = (k == 0) ? spec.map0 : spec.map1;
        alpha[static_cast<std::size_t>(k)] =
            d[k] * (1.0 + prm_map(tau_value / beta, mp));
        break;
      }
      case SchemeTag::ZES3:
        alpha[static_cast<std::size_t>(k)] = d[k] * (1.0 + tau_value / beta);
        break;
    }
  }
  double sum = 0.0;
  for (int k = 0; k < nk; ++k) sum += alpha[static_cast<std::size_t>(k)];
  for (int k = 0; k < nk; ++k)
    omega[static_cast<std::size_t>(k)] = alpha[static_cast<std::size_t>(k)] / sum;
}

}  // namespace weno3z
