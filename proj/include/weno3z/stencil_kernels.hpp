#pragma once
// Pointwise stencil primitives: candidate reconstructions, Jiang-Shu
// smoothness indicators and undivided difference operators on small
// windows of flux samples.

#include <cassert>
#include <cmath>
#include <span>

namespace weno3z {

/// A small ordered slice of point values f_{j-2..j+2} (3 to 5 entries).
/// `offset` is the index of the reference sample f_j inside `values`;
/// `dx` is the (uniform) grid spacing the samples were taken on.
struct StencilWindow {
  std::span<const double> values;
  int offset = 0;
  double dx = 1.0;

  double at(int rel) const {  // f_{j+rel}
    assert(offset + rel >= 0 && offset + rel < static_cast<int>(values.size()));
    return values[static_cast<std::size_t>(offset + rel)];
  }
  int len() const { return static_cast<int>(values.size()); }
};

// Candidate and indicator coefficient tables for the r = 2 and r = 3
// sub-stencils.  Row k of a_r holds the reconstruction coefficients of
// candidate k on points {f_{j-r+k+1}, ..., f_{j+k}}; b/c feed the
// positive semi-definite quadratic form of the smoothness indicators.
namespace table {

inline constexpr double a2[2][2] = {{-0.5, 1.5}, {0.5, 0.5}};
inline constexpr double d2[2] = {1.0 / 3.0, 2.0 / 3.0};
inline constexpr double b2[2][1][2] = {{{-1.0, 1.0}}, {{-1.0, 1.0}}};
inline constexpr double c2[1] = {1.0};

inline constexpr double a3[3][3] = {{2.0 / 6.0, -7.0 / 6.0, 11.0 / 6.0},
                                    {-1.0 / 6.0, 5.0 / 6.0, 2.0 / 6.0},
                                    {2.0 / 6.0, 5.0 / 6.0, -1.0 / 6.0}};
inline constexpr double d3[3] = {0.1, 0.6, 0.3};
// m = 0 rows are first-derivative differences (weight 1/4), m = 1 rows are
// second differences (weight 13/12).
inline constexpr double b3[3][2][3] = {{{1.0, -4.0, 3.0}, {1.0, -2.0, 1.0}},
                                       {{-1.0, 0.0, 1.0}, {1.0, -2.0, 1.0}},
                                       {{3.0, -4.0, 1.0}, {1.0, -2.0, 1.0}}};
inline constexpr double c3[2] = {0.25, 13.0 / 12.0};

}  // namespace table

/// Candidate approximation q^r_k to h(x_{j+1/2}) on the k-th sub-stencil.
inline double candidate_reconstruct(const StencilWindow& w, int r, int k) {
  assert(r == 2 || r == 3);
  assert(k >= 0 && k < r);
  const int base = w.offset + k - r + 1;  // index of the leftmost point
  assert(base >= 0 && base + r <= w.len());
  double q = 0.0;
  for (int l = 0; l < r; ++l) {
    const double a = (r == 2) ? table::a2[k][l] : table::a3[k][l];
    q += a * w.values[static_cast<std::size_t>(base + l)];
  }
  return q;
}

/// Smoothness indicator beta^(r)_k; exactly zero on constant data.
inline double smoothness_beta(const StencilWindow& w, int r, int k) {
  assert(r == 2 || r == 3);
  assert(k >= 0 && k < r);
  const int base = w.offset + k - r + 1;
  assert(base >= 0 && base + r <= w.len());
  double beta = 0.0;
  for (int m = 0; m < r - 1; ++m) {
    double s = 0.0;
    for (int l = 0; l < r; ++l) {
      const double b = (r == 2) ? table::b2[k][m][l] : table::b3[k][m][l];
      s += b * w.values[static_cast<std::size_t>(base + l)];
    }
    const double c = (r == 2) ? table::c2[m] : table::c3[m];
    beta += c * s * s;
  }
  return beta;
}

/// Undivided difference operators delta^(m)n (m-th derivative discretized
/// at n-th order).  No 1/dx powers are applied; the tau definitions consume
/// the raw differences.
enum class DeltaTag {
  D1O2,  // f_{j+1} - f_{j-1}
  D2O2,  // f_{j+1} - 2 f_j + f_{j-1}
  D1O3,  // -f_{j+2} + 6 f_{j+1} - 3 f_j - 2 f_{j-1}
  D3O1,  // f_{j+2} - 3 f_{j+1} + 3 f_j - f_{j-1}
  D1O4,  // -f_{j+2} + 8 f_{j+1} - 8 f_{j-1} + f_{j-2}
  D2O4,  // -f_{j+2} + 16 f_{j+1} - 30 f_j + 16 f_{j-1} - f_{j-2}
  D3O2,  // f_{j+2} - 2 f_{j+1} + 2 f_{j-1} - f_{j-2}
  D4O2,  // f_{j+2} - 4 f_{j+1} + 6 f_j - 4 f_{j-1} + f_{j-2}
};

inline double finite_delta(const StencilWindow& w, DeltaTag id) {
  switch (id) {
    case DeltaTag::D1O2:
      return w.at(1) - w.at(-1);
    case DeltaTag::D2O2:
      return w.at(1) - 2.0 * w.at(0) + w.at(-1);
    case DeltaTag::D1O3:
      return -w.at(2) + 6.0 * w.at(1) - 3.0 * w.at(0) - 2.0 * w.at(-1);
    case DeltaTag::D3O1:
      return w.at(2) - 3.0 * w.at(1) + 3.0 * w.at(0) - w.at(-1);
    case DeltaTag::D1O4:
      return -w.at(2) + 8.0 * w.at(1) - 8.0 * w.at(-1) + w.at(-2);
    case DeltaTag::D2O4:
      return -w.at(2) + 16.0 * w.at(1) - 30.0 * w.at(0) + 16.0 * w.at(-1) -
             w.at(-2);
    case DeltaTag::D3O2:
      return w.at(2) - 2.0 * w.at(1) + 2.0 * w.at(-1) - w.at(-2);
    case DeltaTag::D4O2:
      return w.at(2) - 4.0 * w.at(1) + 6.0 * w.at(0) - 4.0 * w.at(-1) +
             w.at(-2);
  }
  return 0.0;  // unreachable
}

}  // namespace weno3z
