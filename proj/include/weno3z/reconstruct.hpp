#pragma once
// Interface-value reconstruction: turns a window of (split) flux samples
// into the scheme's approximation of h(x_{j+1/2}).

#include <algorithm>
#include <array>
#include <span>

#include "weno3z/global_indicators.hpp"
#include "weno3z/weight_engine.hpp"

namespace weno3z {

enum class Wind { Positive, Negative };

inline TauKind scheme_tau_kind(SchemeTag t) {
  switch (t) {
    case SchemeTag::Z3:
    case SchemeTag::Z3POW:
    case SchemeTag::PZ3:
      return TauKind::Tau3;
    case SchemeTag::NP3:
    case SchemeTag::NN3:
      return TauKind::TauN;
    case SchemeTag::F3:
      return TauKind::TauF3;
    case SchemeTag::PPLUS3:
      return TauKind::TauP;
    case SchemeTag::ZM3:
      return TauKind::TauCP1;
    default:
      return TauKind::TauCP2;  // ZES3; JS3/JS5 never ask
  }
}

/// Reconstruct f_{j+1/2} from `values`, the scheme's stencil read
/// left-to-right in physical order.  For positive wind the window is
/// {f_{j+1-W+off}, ..}; for negative wind the caller passes the mirror image
/// of that point set about the interface and the window is reversed here
/// before the positive-wind formulas are applied.
inline double reconstruct_interface(std::span<const double> values, double dx,
                                    const SchemeSpec& spec, Wind wind) {
  const int width = scheme_stencil_width(spec);
  assert(static_cast<int>(values.size()) == width);

  std::array<double, 5> buf{};
  if (wind == Wind::Negative) {
    for (int i = 0; i < width; ++i)
      buf[static_cast<std::size_t>(i)] =
          values[static_cast<std::size_t>(width - 1 - i)];
  } else {
    std::copy(values.begin(), values.end(), buf.begin());
  }
  const StencilWindow w{std::span<const double>(buf.data(),
                                                static_cast<std::size_t>(width)),
                        scheme_window_offset(spec), dx};

  const int nk = scheme_candidate_count(spec);
  std::array<double, 3> beta{};
  std::array<double, 3> q{};
  switch (spec.tag) {
    case SchemeTag::ZM3:
      beta[0] = smoothness_beta(w, 2, 0);
      beta[1] = smoothness_beta(w, 3, 2);
      break;
    case SchemeTag::ZES3:
      beta[0] = smoothness_beta(w, 3, 0);
      beta[1] = smoothness_beta(w, 3, 2);
      break;
    case SchemeTag::JS5:
      for (int k = 0; k < 3; ++k) beta[static_cast<std::size_t>(k)] = smoothness_beta(w, 3, k);
      break;
    default:
      beta[0] = smoothness_beta(w, 2, 0);
      beta[1] = smoothness_beta(w, 2, 1);
      break;
  }
  const int r = (spec.tag == SchemeTag::JS5) ? 3 : 2;
  for (int k = 0; k < nk; ++k)
    q[static_cast<std::size_t>(k)] = candidate_reconstruct(w, r, k);

  const double tau_value = scheme_uses_tau(spec.tag)
                               ? tau(w, scheme_tau_kind(spec.tag), spec.cp2_scale)
                               : 0.0;

  std::array<double, 3> omega{};
  nonlinear_weights(std::span<const double>(beta.data(), static_cast<std::size_t>(nk)),
                    tau_value, dx, spec,
                    std::span<double>(omega.data(), static_cast<std::size_t>(nk)));

  double fhat = 0.0;
  for (int k = 0; k < nk; ++k)
    fhat += omega[static_cast<std::size_t>(k)] * q[static_cast<std::size_t>(k)];
  return fhat;
}

/// Offset of the leftmost point of the positive-wind window relative to j,
/// for the interface j+1/2.
inline int window_left_positive(const SchemeSpec& spec) {
  return -scheme_window_offset(spec);
}

/// Offset of the leftmost point of the (unreversed) negative-wind window
/// relative to j: the mirror of the positive point set about the interface.
inline int window_left_negative(const SchemeSpec& spec) {
  return 2 + scheme_window_offset(spec) - scheme_stencil_width(spec);
}

}  // namespace weno3z
