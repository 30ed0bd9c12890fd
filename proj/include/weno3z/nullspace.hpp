#pragma once
// Numeric nullspace oracle for quadratic-form global indicators: assembles
// the homogeneous order constraints on a symmetric stencil form tau(f) =
// f^T A f and extracts the admissible solution space by SVD.

#include <cstdint>
#include <string>
#include <vector>

namespace weno3z {

struct NullspaceTargets {
  // Kill every dx^q coefficient with q < generic_order for arbitrary
  // critical-point offsets lambda.
  int generic_order = 5;
  // Additionally kill the dx^5 and dx^6 coefficients at lambda = -1/2
  // (leading error O(dx^7) on the half node).
  bool half_node_order7 = false;
};

struct NullspaceResult {
  int stencil_points = 0;
  std::string constraint_set;
  int dimension = 0;
  // Unit-norm basis vectors over the upper-triangle entries of A,
  // enumerated (0,0),(0,1),...,(0,n-1),(1,1),... row-major.
  std::vector<std::vector<double>> basis;
  double residual = 0.0;  // max |constraint row . basis vector|
  double gap = 0.0;       // smallest kept / largest dropped singular value
};

/// Assemble and solve the constraint system for a 3- or 4-point stencil.
/// Critical points are first-order (f' = 0, f'', f''' != 0) placed at
/// random lambda in (-1, 1) for 3 points and (-1, 2) for 4 points.
/// Throws std::runtime_error with a condition estimate when the singular
/// value gap is too ambiguous to call the rank.
NullspaceResult quadratic_form_nullspace(int stencil_points,
                                         const NullspaceTargets& targets,
                                         std::uint64_t seed = 777);

/// Upper-triangle vector of the symmetrized outer product that factors as
/// (-f_{j+2} + 3 f_{j+1} + 21 f_j - 23 f_{j-1}) (f_{j+2} - 3 f_{j+1} + 3 f_j - f_{j-1}),
/// normalized to unit length with a fixed sign convention.
std::vector<double> tau_cp1_form_vector();

/// Coefficient vectors (upper-triangle convention) of the 3-point family
///   a1 (f_j - f_{j-1})^2 + a2 (f_{j+1} - f_j)^2 + a3 (f_{j+1} - f_{j-1})^2
///   + b (f_{j+1} - 2 f_j + f_{j-1})^2   with a3 = -(a1 + a2)/4,
/// used to check membership in the relaxed (order-3) nullspace.
std::vector<std::vector<double>> order3_family_vectors();

/// Max |constraint . v| over a freshly sampled constraint set -- membership
/// test helper for vectors claimed to satisfy the targets.
double nullspace_membership_residual(int stencil_points,
                                     const NullspaceTargets& targets,
                                     const std::vector<double>& v,
                                     std::uint64_t seed = 778);

}  // namespace weno3z
