#include "weno3z/euler1d.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace weno3z {

Euler1DSolver::Euler1DSolver(const CaseConfig& cfg) : cfg_(cfg) {
  if (cfg.is_advection() || cfg.is_2d())
    throw std::invalid_argument("Euler1DSolver: wrong case kind");
  n_ = cfg.n;
  ng_ = std::max(3, scheme_stencil_width(cfg.scheme));
  init_state();
}

void Euler1DSolver::init_state() {
  const double r = cfg_.length_scale;
  const double v = cfg_.var_scale;
  double x1 = 0.0;
  switch (cfg_.tag) {
    case CaseTag::StrongShock:
      x0_ = -5.0 * r;
      x1 = 5.0 * r;
      bc_ = Bc::ZeroGradient;
      break;
    case CaseTag::Blast:
      x0_ = 0.0;
      x1 = 1.0 * r;
      bc_ = Bc::Reflective;
      break;
    case CaseTag::ShuOsher:
      x0_ = -5.0 * r;
      x1 = 5.0 * r;
      bc_ = Bc::ZeroGradient;
      break;
    default:
      throw std::invalid_argument("Euler1DSolver: unsupported case");
  }
  dx_ = (x1 - x0_) / n_;
  const std::size_t total = static_cast<std::size_t>(n_ + 2 * ng_);
  u_.assign(total, Vec3{});
  s1_.assign(total, Vec3{});
  s2_.assign(total, Vec3{});
  s3_.assign(total, Vec3{});
  s4_.assign(total, Vec3{});
  s5_.assign(total, Vec3{});
  fhat_.assign(static_cast<std::size_t>(n_ + 1), Vec3{});

  for (int i = 0; i < n_; ++i) {
    const double xs = x(i) / r;  // unscaled coordinate
    double rho = 0.0, vel = 0.0, p = 0.0;
    switch (cfg_.tag) {
      case CaseTag::StrongShock:
        rho = 1.0;
        vel = 0.0;
        p = (xs < 0.0) ? 0.1 * 1e6 : 0.1;
        break;
      case CaseTag::Blast:
        rho = 1.0;
        vel = 0.0;
        p = (xs < 0.1) ? 1000.0 : (xs <= 0.9 ? 0.01 : 100.0);
        break;
      case CaseTag::ShuOsher:
        if (xs < -4.0) {
          rho = 3.857143;
          vel = 2.629369;
          p = 10.3333;
        } else {
          rho = 1.0 + 0.2 * std::sin(5.0 * xs);
          vel = 0.0;
          p = 1.0;
        }
        break;
      default:
        break;
    }
    cons(i) = encode_cons(v * rho, vel, v * p, cfg_.gamma);
  }
}

void Euler1DSolver::fill_ghosts(std::vector<Vec3>& u) const {
  for (int g = 0; g < ng_; ++g) {
    if (bc_ == Bc::ZeroGradient) {
      u[static_cast<std::size_t>(ng_ - 1 - g)] = u[static_cast<std::size_t>(ng_)];
      u[static_cast<std::size_t>(ng_ + n_ + g)] =
          u[static_cast<std::size_t>(ng_ + n_ - 1)];
    } else {  // reflective wall: mirror cells, negate momentum
      Vec3 l = u[static_cast<std::size_t>(ng_ + g)];
      l[1] = -l[1];
      u[static_cast<std::size_t>(ng_ - 1 - g)] = l;
      Vec3 rr = u[static_cast<std::size_t>(ng_ + n_ - 1 - g)];
      rr[1] = -rr[1];
      u[static_cast<std::size_t>(ng_ + n_ + g)] = rr;
    }
  }
}

void Euler1DSolver::rhs(std::vector<Vec3>& u, std::vector<Vec3>& out) {
  fill_ghosts(u);
  try {
    pencil_interface_fluxes<3>(
        std::span<const Vec3>(u.data(), u.size()), n_, ng_, dx_, cfg_.scheme,
        cfg_.avg, cfg_.gamma, cfg_.eig_smoothing, ws_,
        std::span<Vec3>(fhat_.data(), fhat_.size()));
  } catch (const PencilFailure& f) {
    throw SolverAbort({case_name(cfg_.tag), scheme_name(cfg_.scheme.tag),
                       stats_.steps, t_, std::to_string(f.point - ng_),
                       f.reason});
  }
  for (int i = 0; i < n_; ++i) {
    const Vec3& fr = fhat_[static_cast<std::size_t>(i + 1)];
    const Vec3& fl = fhat_[static_cast<std::size_t>(i)];
    for (int c = 0; c < 3; ++c)
      out[static_cast<std::size_t>(i + ng_)][static_cast<std::size_t>(c)] =
          -(fr[static_cast<std::size_t>(c)] - fl[static_cast<std::size_t>(c)]) / dx_;
  }
}

void Euler1DSolver::stage_check(const std::vector<Vec3>& u) {
  for (int i = 0; i < n_; ++i) {
    const Vec3& c = u[static_cast<std::size_t>(i + ng_)];
    if (!std::isfinite(c[0]) || !std::isfinite(c[1]) || !std::isfinite(c[2])) {
      throw SolverAbort({case_name(cfg_.tag), scheme_name(cfg_.scheme.tag),
                         stats_.steps, t_, std::to_string(i),
                         "non-finite state"});
    }
  }
}

double Euler1DSolver::max_wavespeed() const {
  double s = 0.0;
  for (int i = 0; i < n_; ++i) {
    const Prim1D w = decode_prim(cons(i), cfg_.gamma);
    s = std::max(s, std::fabs(w.u) + std::sqrt(cfg_.gamma * w.p / w.rho));
  }
  return s;
}

void Euler1DSolver::step(double dt) {
  const int lo = ng_, hi = ng_ + n_;
  auto axpy = [&](const std::vector<Vec3>& a, double h, const std::vector<Vec3>& k,
                  std::vector<Vec3>& out) {
    for (int i = lo; i < hi; ++i)
      for (int c = 0; c < 3; ++c)
        out[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)] =
            a[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)] +
            h * k[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)];
  };
  if (cfg_.integrator == TimeIntegrator::RK4) {
    rhs(u_, s1_);
    axpy(u_, 0.5 * dt, s1_, s5_);
    stage_check(s5_);
    rhs(s5_, s2_);
    axpy(u_, 0.5 * dt, s2_, s5_);
    stage_check(s5_);
    rhs(s5_, s3_);
    axpy(u_, dt, s3_, s5_);
    stage_check(s5_);
    rhs(s5_, s4_);
    for (int i = lo; i < hi; ++i)
      for (int c = 0; c < 3; ++c)
        u_[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)] +=
            dt / 6.0 *
            (s1_[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)] +
             2.0 * s2_[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)] +
             2.0 * s3_[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)] +
             s4_[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)]);
    stage_check(u_);
  } else {
    rhs(u_, s1_);
    axpy(u_, dt, s1_, s4_);
    stage_check(s4_);
    rhs(s4_, s2_);
    for (int i = lo; i < hi; ++i)
      for (int c = 0; c < 3; ++c)
        s5_[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)] =
            0.75 * u_[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)] +
            0.25 * (s4_[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)] +
                    dt * s2_[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)]);
    stage_check(s5_);
    rhs(s5_, s3_);
    for (int i = lo; i < hi; ++i)
      for (int c = 0; c < 3; ++c)
        u_[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)] =
            u_[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)] / 3.0 +
            2.0 / 3.0 *
                (s5_[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)] +
                 dt * s3_[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)]);
    stage_check(u_);
  }
}

void Euler1DSolver::advance_to(double t_end) {
  while (t_ < t_end - 1e-14 * t_end) {
    double dt = (cfg_.dt_fixed > 0.0) ? cfg_.dt_fixed
                                      : cfg_.cfl * dx_ / max_wavespeed();
    if (t_ + dt > t_end) dt = t_end - t_;
    step(dt);
    t_ += dt;
    ++stats_.steps;
    for (int i = 0; i < n_; ++i) {
      Prim1D w{};
      try {
        w = decode_prim(cons(i), cfg_.gamma);
      } catch (const NonPhysicalState& e) {
        throw SolverAbort({case_name(cfg_.tag), scheme_name(cfg_.scheme.tag),
                           stats_.steps, t_, std::to_string(i), e.what()});
      }
      stats_.min_rho = std::min(stats_.min_rho, w.rho);
      stats_.min_p = std::min(stats_.min_p, w.p);
    }
  }
  t_ = t_end;
}

}  // namespace weno3z
