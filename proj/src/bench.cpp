#include "weno3z/bench.hpp"

#include <algorithm>
#include <chrono>

#include "weno3z/euler2d.hpp"

namespace weno3z {

std::vector<TimingRow> relative_timing(const std::vector<SchemeSpec>& schemes,
                                       int steps, int n) {
  std::vector<SchemeSpec> list = schemes;
  const bool has_js3 =
      std::any_of(list.begin(), list.end(),
                  [](const SchemeSpec& s) { return s.tag == SchemeTag::JS3; });
  if (!has_js3) list.insert(list.begin(), SchemeSpec::make(SchemeTag::JS3));

  std::vector<TimingRow> rows;
  double js3_seconds = 0.0;
  for (const SchemeSpec& spec : list) {
    CaseConfig cfg = CaseConfig::defaults(CaseTag::Riemann2D);
    cfg.n = n;
    cfg.ny = n;
    cfg.scheme = spec;
    Euler2DSolver solver(cfg);
    const auto t0 = std::chrono::steady_clock::now();
    solver.advance_steps(steps);
    const auto t1 = std::chrono::steady_clock::now();
    TimingRow row;
    row.scheme = spec.tag;
    row.seconds = std::chrono::duration<double>(t1 - t0).count();
    rows.push_back(row);
    if (spec.tag == SchemeTag::JS3) js3_seconds = row.seconds;
  }
  for (TimingRow& row : rows)
    row.relative = 100.0 * row.seconds / js3_seconds;
  return rows;
}

}  // namespace weno3z
