#pragma once
// Artifact writers: convergence CSV mirroring the reference table columns,
// 1-D field snapshots as CSV, 2-D snapshots as flat binary plus CSV header.
// Errors print with 17 significant digits, orders with 3 decimals.

#include <string>
#include <vector>

#include "weno3z/convergence.hpp"

namespace weno3z {

class AdvectionSolver;
class Euler1DSolver;
class Euler2DSolver;

/// Lines prepended (as '# key = value') to every artifact: the normalized
/// config plus library version and seed.
using HeaderLines = std::vector<std::string>;

std::string format_error(double v);  // 17 significant digits
std::string format_order(double v);  // 3 decimals

void write_convergence_csv(const std::string& path, const ConvergenceReport& r,
                           const HeaderLines& header);

void write_field_csv(const std::string& path, const AdvectionSolver& s,
                     const HeaderLines& header);
void write_field_csv(const std::string& path, const Euler1DSolver& s,
                     const HeaderLines& header);
/// Writes <path>.csv (layout header) and <path>.bin (rho, u, v, p planes,
/// row-major, little-endian doubles).
void write_field_2d(const std::string& path, const Euler2DSolver& s,
                    const HeaderLines& header);

}  // namespace weno3z
