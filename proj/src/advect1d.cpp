#include "weno3z/advect1d.hpp"

#include <cmath>
#include <stdexcept>

#include "weno3z/reconstruct.hpp"

namespace weno3z {

AdvectionSolver::AdvectionSolver(const CaseConfig& cfg) : cfg_(cfg) {
  if (!cfg.is_advection())
    throw std::invalid_argument("AdvectionSolver: non-advection case");
  n_ = cfg.n;
  dx_ = 2.0 / n_;
  const std::size_t total = static_cast<std::size_t>(n_ + 2 * ng_);
  u_.assign(total, 0.0);
  for (int i = 0; i < n_; ++i)
    u_[static_cast<std::size_t>(i + ng_)] = advection_profile(cfg.tag, x(i));
  fhat_.assign(static_cast<std::size_t>(n_ + 1), 0.0);
  s1_.assign(total, 0.0);
  s2_.assign(total, 0.0);
  s3_.assign(total, 0.0);
  s4_.assign(total, 0.0);
  s5_.assign(total, 0.0);
}

void AdvectionSolver::fill_ghosts(std::vector<double>& u) const {
  for (int g = 0; g < ng_; ++g) {
    u[static_cast<std::size_t>(g)] = u[static_cast<std::size_t>(n_ + g)];
    u[static_cast<std::size_t>(n_ + ng_ + g)] = u[static_cast<std::size_t>(ng_ + g)];
  }
}

void AdvectionSolver::rhs(std::vector<double>& u, std::vector<double>& out) {
  fill_ghosts(u);
  const SchemeSpec& spec = cfg_.scheme;
  const int width = scheme_stencil_width(spec);
  const int wlp = window_left_positive(spec);
  // Interface k sits between nodes k-1 and k; wind is uniformly positive.
  for (int k = 0; k <= n_; ++k) {
    const int left = k - 1 + wlp + ng_;
    fhat_[static_cast<std::size_t>(k)] = reconstruct_interface(
        std::span<const double>(u.data() + left, static_cast<std::size_t>(width)),
        dx_, spec, Wind::Positive);
  }
  for (int i = 0; i < n_; ++i)
    out[static_cast<std::size_t>(i + ng_)] =
        -(fhat_[static_cast<std::size_t>(i + 1)] - fhat_[static_cast<std::size_t>(i)]) / dx_;
}

void AdvectionSolver::check_finite(const std::vector<double>& u) const {
  for (int i = 0; i < n_; ++i) {
    if (!std::isfinite(u[static_cast<std::size_t>(i + ng_)])) {
      throw SolverAbort({case_name(cfg_.tag), scheme_name(cfg_.scheme.tag),
                         steps_, t_, std::to_string(i), "non-finite state"});
    }
  }
}

void AdvectionSolver::step(double dt) {
  const int lo = ng_, hi = ng_ + n_;
  if (cfg_.integrator == TimeIntegrator::RK4) {
    rhs(u_, s1_);
    for (int i = lo; i < hi; ++i)
      s5_[static_cast<std::size_t>(i)] =
          u_[static_cast<std::size_t>(i)] + 0.5 * dt * s1_[static_cast<std::size_t>(i)];
    rhs(s5_, s2_);
    for (int i = lo; i < hi; ++i)
      s5_[static_cast<std::size_t>(i)] =
          u_[static_cast<std::size_t>(i)] + 0.5 * dt * s2_[static_cast<std::size_t>(i)];
    rhs(s5_, s3_);
    for (int i = lo; i < hi; ++i)
      s5_[static_cast<std::size_t>(i)] =
          u_[static_cast<std::size_t>(i)] + dt * s3_[static_cast<std::size_t>(i)];
    rhs(s5_, s4_);
    for (int i = lo; i < hi; ++i)
      u_[static_cast<std::size_t>(i)] +=
          dt / 6.0 *
          (s1_[static_cast<std::size_t>(i)] + 2.0 * s2_[static_cast<std::size_t>(i)] +
           2.0 * s3_[static_cast<std::size_t>(i)] + s4_[static_cast<std::size_t>(i)]);
    check_finite(u_);
  } else {  // TVD-RK3
    rhs(u_, s1_);
    for (int i = lo; i < hi; ++i)
      s4_[static_cast<std::size_t>(i)] =
          u_[static_cast<std::size_t>(i)] + dt * s1_[static_cast<std::size_t>(i)];
    check_finite(s4_);
    rhs(s4_, s2_);
    for (int i = lo; i < hi; ++i)
      s5_[static_cast<std::size_t>(i)] =
          0.75 * u_[static_cast<std::size_t>(i)] +
          0.25 * (s4_[static_cast<std::size_t>(i)] + dt * s2_[static_cast<std::size_t>(i)]);
    check_finite(s5_);
    rhs(s5_, s3_);
    for (int i = lo; i < hi; ++i)
      u_[static_cast<std::size_t>(i)] =
          u_[static_cast<std::size_t>(i)] / 3.0 +
          2.0 / 3.0 *
              (s5_[static_cast<std::size_t>(i)] + dt * s3_[static_cast<std::size_t>(i)]);
    check_finite(u_);
  }
}

void AdvectionSolver::advance_to(double t_end) {
  const double dt_nominal =
      (cfg_.dt_fixed > 0.0) ? cfg_.dt_fixed : cfg_.cfl * dx_;
  while (t_ < t_end - 1e-14 * t_end) {
    double dt = dt_nominal;
    if (t_ + dt > t_end) dt = t_end - t_;
    step(dt);
    t_ += dt;
    ++steps_;
  }
  t_ = t_end;
}

}  // namespace weno3z
