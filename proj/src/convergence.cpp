#include "weno3z/convergence.hpp"

#include <cmath>
#include <stdexcept>

#include "weno3z/advect1d.hpp"
#include "weno3z/norms.hpp"
#include "weno3z/run_record.hpp"

namespace weno3z {

const ConvergenceRow& ConvergenceReport::at_n(int n) const {
  for (const auto& r : rows)
    if (r.n == n) return r;
  throw std::out_of_range("ConvergenceReport: no row for n = " + std::to_string(n));
}

ConvergenceReport convergence_study(const SchemeSpec& scheme, CaseTag case_tag,
                                    double cfl, const std::vector<int>& n_list,
                                    double t_end) {
  ConvergenceReport report;
  report.scheme = scheme;
  report.case_tag = case_tag;
  report.cfl = cfl;

  for (int n : n_list) {
    CaseConfig cfg = CaseConfig::defaults(case_tag);
    cfg.scheme = scheme;
    cfg.n = n;
    cfg.cfl = cfl;
    cfg.dt_fixed = -1.0;
    cfg.t_end = t_end;

    ConvergenceRow row;
    row.n = n;
    row.dt = cfl * 2.0 / n;
    try {
      AdvectionSolver solver(cfg);
      solver.advance_to(t_end);
      std::vector<double> exact(static_cast<std::size_t>(n));
      for (int i = 0; i < n; ++i) {
        // Exact solution is the initial profile advected by t (periodic).
        double xs = solver.x(i) - t_end;
        xs -= 2.0 * std::floor((xs + 1.0) / 2.0);
        exact[static_cast<std::size_t>(i)] = advection_profile(case_tag, xs);
      }
      const Norms norms = error_norms(solver.interior(), exact);
      row.l1_error = norms.l1;
      row.linf_error = norms.linf;
    } catch (const SolverAbort& abort) {
      row.failed = true;
      row.failure_reason = abort.record.line();
    }
    report.rows.push_back(row);
  }

  for (std::size_t i = 1; i < report.rows.size(); ++i) {
    ConvergenceRow& cur = report.rows[i];
    const ConvergenceRow& prev = report.rows[i - 1];
    if (cur.failed || prev.failed) continue;
    cur.l1_order = std::log2(prev.l1_error / cur.l1_error);
    cur.linf_order = std::log2(prev.linf_error / cur.linf_error);
  }
  return report;
}

}  // namespace weno3z
