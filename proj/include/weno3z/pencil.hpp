#pragma once
// Characteristic-wise interface fluxes along a 1-D pencil of Euler states.
// Shared by the 1-D solver and both sweep directions of the 2-D solver.

#include <array>
#include <span>
#include <vector>

#include "weno3z/cases.hpp"
#include "weno3z/euler.hpp"
#include "weno3z/reconstruct.hpp"

namespace weno3z {

/// Raised from inside a pencil sweep; `point` is the pencil-local index
/// (including ghosts) of the offending state.
struct PencilFailure {
  int point;
  std::string reason;
};

/// Scratch buffers reused across pencil sweeps to avoid per-call allocation.
template <int NC>
struct PencilWorkspace {
  std::vector<std::array<double, NC>> f_plus;
  std::vector<std::array<double, NC>> f_minus;
  void resize(std::size_t points) {
    f_plus.resize(points);
    f_minus.resize(points);
  }
};

/// Compute interface fluxes fhat[0..n] for a pencil of n interior states
/// with ng ghost points on each side (states.size() == n + 2*ng).
/// Interface k sits between interior cells k-1 and k.
template <int NC>
void pencil_interface_fluxes(std::span<const std::array<double, NC>> states,
                             int n, int ng, double dx, const SchemeSpec& spec,
                             AvgKind avg, double gamma, double eig_smoothing,
                             PencilWorkspace<NC>& ws,
                             std::span<std::array<double, NC>> fhat) {
  using VecN = std::array<double, NC>;
  const int width = scheme_stencil_width(spec);
  const int wlp = window_left_positive(spec);
  const int wln = window_left_negative(spec);
  const int total = n + 2 * ng;

  ws.resize(static_cast<std::size_t>(total));
  for (int i = 0; i < total; ++i) {
    try {
      steger_warming_split(states[static_cast<std::size_t>(i)], gamma,
                           ws.f_plus[static_cast<std::size_t>(i)],
                           ws.f_minus[static_cast<std::size_t>(i)],
                           eig_smoothing);
    } catch (const NonPhysicalState& e) {
      throw PencilFailure{i, e.what()};
    }
  }

  for (int k = 0; k <= n; ++k) {
    const int jl = k - 1 + ng;  // array index of the cell left of the interface
    VecN cavg;
    if (avg == AvgKind::Roe) {
      cavg = roe_average(states[static_cast<std::size_t>(jl)],
                         states[static_cast<std::size_t>(jl + 1)], gamma);
    } else {
      for (int c = 0; c < NC; ++c)
        cavg[static_cast<std::size_t>(c)] =
            0.5 * (states[static_cast<std::size_t>(jl)][static_cast<std::size_t>(c)] +
                   states[static_cast<std::size_t>(jl + 1)][static_cast<std::size_t>(c)]);
    }
    auto eig = [&] {
      try {
        return eigensystem(cavg, gamma);
      } catch (const NonPhysicalState& e) {
        throw PencilFailure{jl, std::string("interface average: ") + e.what()};
      }
    }();

    // Characteristic window values, one row per field.
    double wpos[NC][5];
    double wneg[NC][5];
    for (int i = 0; i < width; ++i) {
      const VecN cp = project(eig, ws.f_plus[static_cast<std::size_t>(jl + wlp + i)]);
      const VecN cm = project(eig, ws.f_minus[static_cast<std::size_t>(jl + wln + i)]);
      for (int m = 0; m < NC; ++m) {
        wpos[m][i] = cp[static_cast<std::size_t>(m)];
        wneg[m][i] = cm[static_cast<std::size_t>(m)];
      }
    }

    VecN chat{};
    for (int m = 0; m < NC; ++m) {
      const double hp = reconstruct_interface(
          std::span<const double>(wpos[m], static_cast<std::size_t>(width)), dx,
          spec, Wind::Positive);
      const double hm = reconstruct_interface(
          std::span<const double>(wneg[m], static_cast<std::size_t>(width)), dx,
          spec, Wind::Negative);
      chat[static_cast<std::size_t>(m)] = hp + hm;
    }
    fhat[static_cast<std::size_t>(k)] = unproject(eig, chat);
  }
}

}  // namespace weno3z
