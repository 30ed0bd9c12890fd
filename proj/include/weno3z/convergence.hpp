#pragma once
// Grid-refinement studies on the scalar advection cases; orders are the
// pairwise log2 ratios the reference tables print.

#include <string>
#include <vector>

#include "weno3z/cases.hpp"

namespace weno3z {

struct ConvergenceRow {
  int n = 0;
  double dt = 0.0;
  double l1_error = 0.0;
  double l1_order = 0.0;  // valid from the second row
  double linf_error = 0.0;
  double linf_order = 0.0;
  bool failed = false;          // solver abort recorded, errors meaningless
  std::string failure_reason;
};

struct ConvergenceReport {
  SchemeSpec scheme;
  CaseTag case_tag = CaseTag::SineCP;
  double cfl = 0.0;
  std::vector<ConvergenceRow> rows;  // sorted by n ascending

  const ConvergenceRow& at_n(int n) const;
};

/// Run `scheme` on the advection `case_tag` for every resolution in
/// `n_list` (dyadic, ascending) and assemble the error/order table.
/// Solver aborts become failed rows, not exceptions.
ConvergenceReport convergence_study(const SchemeSpec& scheme, CaseTag case_tag,
                                    double cfl, const std::vector<int>& n_list,
                                    double t_end = 2.0);

}  // namespace weno3z
