#pragma once
// 2-D Euler solver, dimension-by-dimension sweeps of the 1-D pencil kernel.
// Row (x) sweeps read the field in place; column (y) sweeps gather pencils
// in the (rho, mom_n, mom_t, E) convention so both directions execute
// identical arithmetic.

#include <optional>
#include <vector>

#include "weno3z/cases.hpp"
#include "weno3z/euler.hpp"
#include "weno3z/pencil.hpp"
#include "weno3z/run_record.hpp"

namespace weno3z {

class Euler2DSolver {
 public:
  explicit Euler2DSolver(const CaseConfig& cfg);

  void advance_to(double t_end);

  /// Advance a fixed number of CFL-limited steps (timing studies).
  void advance_steps(int count);

  int nx() const { return nx_; }
  int ny() const { return ny_; }
  double dx() const { return dx_; }
  double dy() const { return dy_; }
  double x(int i) const { return x0_ + (i + 0.5) * dx_; }
  double y(int j) const { return y0_ + (j + 0.5) * dy_; }
  double time() const { return t_; }
  const CaseConfig& config() const { return cfg_; }
  const RunStats& stats() const { return stats_; }

  const Vec4& cons(int i, int j) const { return u_[idx(i, j)]; }
  Vec4& cons(int i, int j) { return u_[idx(i, j)]; }
  Prim2D prim(int i, int j) const { return decode_prim(cons(i, j), cfg_.gamma); }

 private:
  std::size_t idx(int i, int j) const {
    return static_cast<std::size_t>(j + ng_) * static_cast<std::size_t>(stride_) +
           static_cast<std::size_t>(i + ng_);
  }

  void init_state();
  void fill_ghosts(std::vector<Vec4>& u, double stage_time) const;
  void rhs(std::vector<Vec4>& u, std::vector<Vec4>& out, double stage_time);
  void stage_check(const std::vector<Vec4>& u);
  void step(double dt);
  double max_inverse_dt() const;
  Vec4 dmr_post_shock() const;
  Vec4 dmr_pre_shock() const;

  CaseConfig cfg_;
  int nx_ = 0, ny_ = 0;
  int ng_ = 5;
  int stride_ = 0;
  double x0_ = 0.0, y0_ = 0.0;
  double dx_ = 0.0, dy_ = 0.0;
  double t_ = 0.0;
  RunStats stats_;
  std::vector<Vec4> u_, s1_, s2_, s3_, s4_;
};

}  // namespace weno3z
