#include "weno3z/euler2d.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace weno3z {

namespace {
constexpr double kSqrt3 = 1.7320508075688772;

struct SweepFailure {
  int i, j;
  std::string reason;
};
}  // namespace

Euler2DSolver::Euler2DSolver(const CaseConfig& cfg) : cfg_(cfg) {
  if (!cfg.is_2d()) throw std::invalid_argument("Euler2DSolver: not a 2-D case");
  nx_ = cfg.n;
  ny_ = cfg.ny > 0 ? cfg.ny : cfg.n;
  ng_ = std::max(3, scheme_stencil_width(cfg.scheme));
  stride_ = nx_ + 2 * ng_;
  init_state();
}

Vec4 Euler2DSolver::dmr_post_shock() const {
  // Mach 10 shock into (1.4, 0, 0, 1); velocity normal to the 60-degree
  // shock front.
  const double un = 8.25;
  return encode_cons(8.0, un * kSqrt3 / 2.0, -un * 0.5, 116.5, cfg_.gamma);
}

Vec4 Euler2DSolver::dmr_pre_shock() const {
  return encode_cons(1.4, 0.0, 0.0, 1.0, cfg_.gamma);
}

void Euler2DSolver::init_state() {
  const std::size_t total =
      static_cast<std::size_t>(stride_) * static_cast<std::size_t>(ny_ + 2 * ng_);
  u_.assign(total, Vec4{});
  s1_.assign(total, Vec4{});
  s2_.assign(total, Vec4{});
  s3_.assign(total, Vec4{});
  s4_.assign(total, Vec4{});

  if (cfg_.tag == CaseTag::Riemann2D) {
    x0_ = 0.0;
    y0_ = 0.0;
    dx_ = 1.0 / nx_;
    dy_ = 1.0 / ny_;
    for (int j = 0; j < ny_; ++j)
      for (int i = 0; i < nx_; ++i) {
        const bool xr = x(i) >= 0.8, yr = y(j) >= 0.8;
        double rho, uu, vv, p;
        if (xr && yr) {
          rho = 1.5; uu = 0.0; vv = 0.0; p = 1.5;
        } else if (!xr && yr) {
          rho = 0.5323; uu = 1.206; vv = 0.0; p = 0.3;
        } else if (!xr && !yr) {
          rho = 0.138; uu = 1.206; vv = 1.206; p = 0.029;
        } else {
          rho = 0.5323; uu = 0.0; vv = 1.206; p = 0.3;
        }
        cons(i, j) = encode_cons(rho, uu, vv, p, cfg_.gamma);
      }
  } else {  // DMR
    x0_ = 0.0;
    y0_ = 0.0;
    dx_ = 3.0 / nx_;
    dy_ = 1.0 / ny_;
    const Vec4 post = dmr_post_shock();
    const Vec4 pre = dmr_pre_shock();
    for (int j = 0; j < ny_; ++j)
      for (int i = 0; i < nx_; ++i)
        cons(i, j) = (x(i) < 1.0 / 6.0 + y(j) / kSqrt3) ? post : pre;
  }
}

void Euler2DSolver::fill_ghosts(std::vector<Vec4>& u, double stage_time) const {
  auto at = [&](int i, int j) -> Vec4& { return u[idx(i, j)]; };

  if (cfg_.tag == CaseTag::Riemann2D) {
    for (int j = 0; j < ny_; ++j)
      for (int g = 1; g <= ng_; ++g) {
        at(-g, j) = at(0, j);
        at(nx_ - 1 + g, j) = at(nx_ - 1, j);
      }
    for (int i = -ng_; i < nx_ + ng_; ++i)
      for (int g = 1; g <= ng_; ++g) {
        at(i, -g) = at(i, 0);
        at(i, ny_ - 1 + g) = at(i, ny_ - 1);
      }
    return;
  }

  // DMR: post-shock inflow on the left, zero-gradient on the right.
  const Vec4 post = dmr_post_shock();
  const Vec4 pre = dmr_pre_shock();
  for (int j = 0; j < ny_; ++j)
    for (int g = 1; g <= ng_; ++g) {
      at(-g, j) = post;
      at(nx_ - 1 + g, j) = at(nx_ - 1, j);
    }
  // Bottom: post-shock state ahead of the wall start, reflecting wall after.
  for (int i = -ng_; i < nx_ + ng_; ++i) {
    const double xc = x0_ + (i + 0.5) * dx_;
    for (int g = 1; g <= ng_; ++g) {
      if (xc < 1.0 / 6.0) {
        at(i, -g) = post;
      } else {
        Vec4 m = at(i, g - 1);
        m[2] = -m[2];
        at(i, -g) = m;
      }
    }
  }
  // Top: exact shock position x_s(y, t) = 1/6 + (y + 20 t)/sqrt(3).
  for (int i = -ng_; i < nx_ + ng_; ++i) {
    const double xc = x0_ + (i + 0.5) * dx_;
    for (int g = 1; g <= ng_; ++g) {
      const double yc = y0_ + (ny_ + g - 0.5) * dy_;
      const double xs = 1.0 / 6.0 + (yc + 20.0 * stage_time) / kSqrt3;
      at(i, ny_ - 1 + g) = (xc < xs) ? post : pre;
    }
  }
}

void Euler2DSolver::rhs(std::vector<Vec4>& u, std::vector<Vec4>& out,
                        double stage_time) {
  fill_ghosts(u, stage_time);
  std::optional<SweepFailure> failure;

#ifdef _OPENMP
#pragma omp parallel
#endif
  {
    PencilWorkspace<4> ws;
    std::vector<Vec4> fhat(static_cast<std::size_t>(std::max(nx_, ny_) + 1));
    std::vector<Vec4> pencil(
        static_cast<std::size_t>(std::max(nx_, ny_) + 2 * ng_));

    // x-sweeps: rows are contiguous in memory.
#ifdef _OPENMP
#pragma omp for schedule(static)
#endif
    for (int j = 0; j < ny_; ++j) {
      if (failure) continue;
      const Vec4* row = &u[idx(-ng_, j)];
      try {
        pencil_interface_fluxes<4>(
            std::span<const Vec4>(row, static_cast<std::size_t>(stride_)), nx_,
            ng_, dx_, cfg_.scheme, cfg_.avg, cfg_.gamma, cfg_.eig_smoothing, ws,
            std::span<Vec4>(fhat.data(), static_cast<std::size_t>(nx_ + 1)));
      } catch (const PencilFailure& f) {
#ifdef _OPENMP
#pragma omp critical
#endif
        if (!failure) failure = SweepFailure{f.point - ng_, j, f.reason};
        continue;
      }
      for (int i = 0; i < nx_; ++i) {
        Vec4& o = out[idx(i, j)];
        for (int c = 0; c < 4; ++c)
          o[static_cast<std::size_t>(c)] =
              -(fhat[static_cast<std::size_t>(i + 1)][static_cast<std::size_t>(c)] -
                fhat[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)]) /
              dx_;
      }
    }

    // y-sweeps: gather columns into (rho, mom_y, mom_x, E) pencils.
#ifdef _OPENMP
#pragma omp for schedule(static)
#endif
    for (int i = 0; i < nx_; ++i) {
      if (failure) continue;
      for (int j = -ng_; j < ny_ + ng_; ++j) {
        const Vec4& c = u[idx(i, j)];
        pencil[static_cast<std::size_t>(j + ng_)] = {c[0], c[2], c[1], c[3]};
      }
      try {
        pencil_interface_fluxes<4>(
            std::span<const Vec4>(pencil.data(),
                                  static_cast<std::size_t>(ny_ + 2 * ng_)),
            ny_, ng_, dy_, cfg_.scheme, cfg_.avg, cfg_.gamma, cfg_.eig_smoothing,
            ws, std::span<Vec4>(fhat.data(), static_cast<std::size_t>(ny_ + 1)));
      } catch (const PencilFailure& f) {
#ifdef _OPENMP
#pragma omp critical
#endif
        if (!failure) failure = SweepFailure{i, f.point - ng_, f.reason};
        continue;
      }
      for (int j = 0; j < ny_; ++j) {
        Vec4& o = out[idx(i, j)];
        const Vec4& fr = fhat[static_cast<std::size_t>(j + 1)];
        const Vec4& fl = fhat[static_cast<std::size_t>(j)];
        // Pencil components (rho, mom_y, mom_x, E) map back to field order.
        o[0] -= (fr[0] - fl[0]) / dy_;
        o[1] -= (fr[2] - fl[2]) / dy_;
        o[2] -= (fr[1] - fl[1]) / dy_;
        o[3] -= (fr[3] - fl[3]) / dy_;
      }
    }
  }

  if (failure) {
    throw SolverAbort({case_name(cfg_.tag), scheme_name(cfg_.scheme.tag),
                       stats_.steps, t_,
                       std::to_string(failure->i) + "," + std::to_string(failure->j),
                       failure->reason});
  }
}

void Euler2DSolver::stage_check(const std::vector<Vec4>& u) {
  for (int j = 0; j < ny_; ++j)
    for (int i = 0; i < nx_; ++i) {
      const Vec4& c = u[idx(i, j)];
      if (!std::isfinite(c[0]) || !std::isfinite(c[1]) ||
          !std::isfinite(c[2]) || !std::isfinite(c[3])) {
        throw SolverAbort({case_name(cfg_.tag), scheme_name(cfg_.scheme.tag),
                           stats_.steps, t_,
                           std::to_string(i) + "," + std::to_string(j),
                           "non-finite state"});
      }
    }
}

double Euler2DSolver::max_inverse_dt() const {
  double s = 0.0;
  for (int j = 0; j < ny_; ++j)
    for (int i = 0; i < nx_; ++i) {
      const Prim2D w = decode_prim(cons(i, j), cfg_.gamma);
      const double a = std::sqrt(cfg_.gamma * w.p / w.rho);
      s = std::max(s, (std::fabs(w.un) + a) / dx_ + (std::fabs(w.ut) + a) / dy_);
    }
  return s;
}

void Euler2DSolver::step(double dt) {
  const std::size_t total = u_.size();
  auto combine = [&](double ca, const std::vector<Vec4>& a, double cb,
                     const std::vector<Vec4>& b, double ck,
                     const std::vector<Vec4>& k, std::vector<Vec4>& out) {
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
    for (long long q = 0; q < static_cast<long long>(total); ++q) {
      const std::size_t s = static_cast<std::size_t>(q);
      for (int c = 0; c < 4; ++c)
        out[s][static_cast<std::size_t>(c)] =
            ca * a[s][static_cast<std::size_t>(c)] +
            cb * b[s][static_cast<std::size_t>(c)] +
            ck * k[s][static_cast<std::size_t>(c)];
    }
  };
  // TVD-RK3 stages at t, t + dt, t + dt/2.
  rhs(u_, s1_, t_);
  combine(1.0, u_, 0.0, u_, dt, s1_, s2_);
  stage_check(s2_);
  rhs(s2_, s1_, t_ + dt);
  combine(0.75, u_, 0.25, s2_, 0.25 * dt, s1_, s3_);
  stage_check(s3_);
  rhs(s3_, s1_, t_ + 0.5 * dt);
  combine(1.0 / 3.0, u_, 2.0 / 3.0, s3_, 2.0 / 3.0 * dt, s1_, u_);
  stage_check(u_);
}

void Euler2DSolver::advance_steps(int count) {
  for (int s = 0; s < count; ++s) {
    const double dt = (cfg_.dt_fixed > 0.0) ? cfg_.dt_fixed
                                            : cfg_.cfl / max_inverse_dt();
    step(dt);
    t_ += dt;
    ++stats_.steps;
  }
}

void Euler2DSolver::advance_to(double t_end) {
  while (t_ < t_end - 1e-14 * t_end) {
    double dt = (cfg_.dt_fixed > 0.0) ? cfg_.dt_fixed
                                      : cfg_.cfl / max_inverse_dt();
    if (t_ + dt > t_end) dt = t_end - t_;
    step(dt);
    t_ += dt;
    ++stats_.steps;
    for (int j = 0; j < ny_; ++j)
      for (int i = 0; i < nx_; ++i) {
        Prim2D w{};
        try {
          w = decode_prim(cons(i, j), cfg_.gamma);
        } catch (const NonPhysicalState& e) {
          throw SolverAbort({case_name(cfg_.tag), scheme_name(cfg_.scheme.tag),
                             stats_.steps, t_,
                             std::to_string(i) + "," + std::to_string(j),
                             e.what()});
        }
        stats_.min_rho = std::min(stats_.min_rho, w.rho);
        stats_.min_p = std::min(stats_.min_p, w.p);
      }
  }
  t_ = t_end;
}

}  // namespace weno3z
