#pragma once
// 1-D scalar advection solver u_t + u_x = 0 on the periodic domain [-1, 1].
// Node-based grid; x = 0 coincides with a grid node for even n.

#include <span>
#include <vector>

#include "weno3z/cases.hpp"
#include "weno3z/run_record.hpp"

namespace weno3z {

class AdvectionSolver {
 public:
  explicit AdvectionSolver(const CaseConfig& cfg);

  /// Advance to t_end; the last step is truncated to land exactly on it.
  void advance_to(double t_end);

  int n() const { return n_; }
  double dx() const { return dx_; }
  double x(int i) const { return -1.0 + i * dx_; }
  double time() const { return t_; }
  long steps() const { return steps_; }
  const CaseConfig& config() const { return cfg_; }

  std::span<const double> interior() const {
    return std::span<const double>(u_.data() + ng_, static_cast<std::size_t>(n_));
  }
  std::span<double> interior() {
    return std::span<double>(u_.data() + ng_, static_cast<std::size_t>(n_));
  }

 private:
  void fill_ghosts(std::vector<double>& u) const;
  void rhs(std::vector<double>& u, std::vector<double>& out);
  void step(double dt);
  void check_finite(const std::vector<double>& u) const;

  CaseConfig cfg_;
  int n_ = 0;
  int ng_ = 3;
  double dx_ = 0.0;
  double t_ = 0.0;
  long steps_ = 0;
  std::vector<double> u_;
  std::vector<double> fhat_;
  std::vector<double> s1_, s2_, s3_, s4_, s5_;
};

}  // namespace weno3z
