#pragma once
// 1-D Euler solver: characteristic-wise WENO reconstruction of
// Steger-Warming split fluxes, TVD-RK3 (or RK4) in time.

#include <vector>

#include "weno3z/cases.hpp"
#include "weno3z/euler.hpp"
#include "weno3z/pencil.hpp"
#include "weno3z/run_record.hpp"

namespace weno3z {

class Euler1DSolver {
 public:
  explicit Euler1DSolver(const CaseConfig& cfg);

  /// Advance to t_end (last step truncated).  Throws SolverAbort on blow-up.
  void advance_to(double t_end);

  int n() const { return n_; }
  double dx() const { return dx_; }
  double x(int i) const { return x0_ + (i + 0.5) * dx_; }
  double time() const { return t_; }
  const CaseConfig& config() const { return cfg_; }
  const RunStats& stats() const { return stats_; }

  const Vec3& cons(int i) const { return u_[static_cast<std::size_t>(i + ng_)]; }
  Vec3& cons(int i) { return u_[static_cast<std::size_t>(i + ng_)]; }
  Prim1D prim(int i) const { return decode_prim(cons(i), cfg_.gamma); }

 private:
  enum class Bc { ZeroGradient, Reflective };

  void init_state();
  void fill_ghosts(std::vector<Vec3>& u) const;
  void rhs(std::vector<Vec3>& u, std::vector<Vec3>& out);
  void stage_check(const std::vector<Vec3>& u);
  void step(double dt);
  double max_wavespeed() const;

  CaseConfig cfg_;
  Bc bc_ = Bc::ZeroGradient;
  int n_ = 0;
  int ng_ = 5;
  double x0_ = 0.0;
  double dx_ = 0.0;
  double t_ = 0.0;
  RunStats stats_;
  std::vector<Vec3> u_, s1_, s2_, s3_, s4_, s5_;
  std::vector<Vec3> fhat_;
  PencilWorkspace<3> ws_;
};

}  // namespace weno3z
