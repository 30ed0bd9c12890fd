#include "weno3z/nullspace.hpp"

#include <Eigen/Dense>
#include <Eigen/SVD>
#include <cmath>
#include <random>
#include <stdexcept>

namespace weno3z {

namespace {

constexpr int kTaylorOrder = 9;  // Taylor coefficients t_0 .. t_8
constexpr double kRankTol = 1e-8;

struct Unknowns {
  int points;
  int count;  // points (points + 1) / 2
  int index(int i1, int i2) const {  // i1 <= i2
    // Row-major upper triangle.
    return i1 * points - i1 * (i1 - 1) / 2 + (i2 - i1);
  }
};

// Taylor sample of a first-order critical point at offset lambda: t1 = 0,
// t2 and t3 bounded away from zero, the rest generic.
struct TaylorSample {
  double lambda;
  double t[kTaylorOrder];
};

TaylorSample draw_sample(std::mt19937_64& rng, double lambda_lo,
                         double lambda_hi) {
  std::uniform_real_distribution<double> lam(lambda_lo, lambda_hi);
  std::uniform_real_distribution<double> mag(0.5, 2.0);
  std::uniform_real_distribution<double> any(-2.0, 2.0);
  std::bernoulli_distribution sign(0.5);
  TaylorSample s{};
  s.lambda = lam(rng);
  s.t[0] = any(rng);
  s.t[1] = 0.0;
  s.t[2] = (sign(rng) ? 1.0 : -1.0) * mag(rng);
  s.t[3] = (sign(rng) ? 1.0 : -1.0) * mag(rng);
  for (int m = 4; m < kTaylorOrder; ++m) s.t[m] = any(rng);
  return s;
}

// Coefficient of dx^q in f_{i1} f_{i2} where f_i = sum_m t_m ((i - lambda) dx)^m
// and the window points are offsets {-1, 0, 1 (, 2)} from the node.
double pair_coefficient(const TaylorSample& s, int off1, int off2, int q) {
  const double s1 = off1 - s.lambda;
  const double s2 = off2 - s.lambda;
  double c = 0.0;
  for (int m = 0; m <= q && m < kTaylorOrder; ++m) {
    const int mm = q - m;
    if (mm >= kTaylorOrder) continue;
    c += s.t[m] * s.t[mm] * std::pow(s1, m) * std::pow(s2, mm);
  }
  return c;
}

void append_row(std::vector<double>& rows, const Unknowns& u,
                const TaylorSample& s, int q, int first_offset) {
  std::vector<double> row(static_cast<std::size_t>(u.count), 0.0);
  for (int i1 = 0; i1 < u.points; ++i1)
    for (int i2 = i1; i2 < u.points; ++i2) {
      const double w = (i1 == i2) ? 1.0 : 2.0;
      row[static_cast<std::size_t>(u.index(i1, i2))] =
          w * pair_coefficient(s, first_offset + i1, first_offset + i2, q);
    }
  // Equilibrate: scale rows to unit max entry (homogeneous system).
  double mx = 0.0;
  for (double v : row) mx = std::max(mx, std::fabs(v));
  if (mx == 0.0) return;
  for (double v : row) rows.push_back(v / mx);
}

std::vector<double> assemble_rows(int points, const NullspaceTargets& targets,
                                  std::uint64_t seed, int* ncols) {
  const Unknowns u{points, points * (points + 1) / 2, };
  *ncols = u.count;
  const int first_offset = -1;  // window is {j-1, j, j+1 (, j+2)}
  const double lambda_hi = (points == 4) ? 2.0 : 1.0;
  std::mt19937_64 rng(seed);

  std::vector<double> rows;
  constexpr int kGenericSamples = 60;
  for (int s = 0; s < kGenericSamples; ++s) {
    const TaylorSample ts = draw_sample(rng, -0.95, lambda_hi - 0.05);
    for (int q = 0; q < targets.generic_order; ++q)
      append_row(rows, u, ts, q, first_offset);
  }
  if (targets.half_node_order7) {
    constexpr int kHalfSamples = 30;
    for (int s = 0; s < kHalfSamples; ++s) {
      TaylorSample ts = draw_sample(rng, -0.5, -0.5);
      ts.lambda = -0.5;
      for (int q = targets.generic_order; q <= 6; ++q)
        append_row(rows, u, ts, q, first_offset);
    }
  }
  return rows;
}

std::string constraint_id(const NullspaceTargets& t) {
  std::string id = "generic<" + std::to_string(t.generic_order);
  if (t.half_node_order7) id += "+half-node<7";
  return id;
}

}  // namespace

NullspaceResult quadratic_form_nullspace(int stencil_points,
                                         const NullspaceTargets& targets,
                                         std::uint64_t seed) {
  if (stencil_points != 3 && stencil_points != 4)
    throw std::invalid_argument("quadratic_form_nullspace: 3 or 4 points");

  int ncols = 0;
  const std::vector<double> flat = assemble_rows(stencil_points, targets, seed, &ncols);
  const int nrows = static_cast<int>(flat.size()) / ncols;

  Eigen::MatrixXd C(nrows, ncols);
  for (int r = 0; r < nrows; ++r)
    for (int c = 0; c < ncols; ++c) C(r, c) = flat[static_cast<std::size_t>(r * ncols + c)];

  Eigen::JacobiSVD<Eigen::MatrixXd> svd(C, Eigen::ComputeThinU | Eigen::ComputeFullV);
  const Eigen::VectorXd sigma = svd.singularValues();
  const double smax = sigma(0);
  const double tol = kRankTol * smax;

  int rank = 0;
  for (int i = 0; i < sigma.size(); ++i)
    if (sigma(i) >= tol) ++rank;
  const int dim = ncols - rank;

  // Refuse when a singular value sits inside the decade around the
  // threshold: the rank call would be arbitrary.
  double kept_min = smax, dropped_max = 0.0;
  for (int i = 0; i < sigma.size(); ++i) {
    if (sigma(i) >= tol)
      kept_min = std::min(kept_min, sigma(i));
    else
      dropped_max = std::max(dropped_max, sigma(i));
  }
  const double gap = (dropped_max > 0.0)
                         ? kept_min / dropped_max
                         : kept_min / (tol > 0 ? tol : 1.0);
  for (int i = 0; i < sigma.size(); ++i) {
    if (sigma(i) > 0.1 * tol && sigma(i) < 10.0 * tol) {
      throw std::runtime_error(
          "quadratic_form_nullspace: ambiguous rank, sigma/sigma_max = " +
          std::to_string(sigma(i) / smax));
    }
  }

  NullspaceResult res;
  res.stencil_points = stencil_points;
  res.constraint_set = constraint_id(targets);
  res.dimension = dim;
  res.gap = gap;
  for (int k = 0; k < dim; ++k) {
    Eigen::VectorXd v = svd.matrixV().col(ncols - 1 - k);
    // Fixed sign convention: largest-magnitude entry positive.
    int imax = 0;
    for (int i = 1; i < v.size(); ++i)
      if (std::fabs(v(i)) > std::fabs(v(imax))) imax = i;
    if (v(imax) < 0.0) v = -v;
    v.normalize();
    res.basis.emplace_back(v.data(), v.data() + v.size());
    const double r = (C * v).lpNorm<Eigen::Infinity>();
    res.residual = std::max(res.residual, r);
  }
  return res;
}

std::vector<double> tau_cp1_form_vector() {
  // (u . f)(w . f) over (f_{j-1}, f_j, f_{j+1}, f_{j+2}).
  const double u[4] = {-23.0, 21.0, 3.0, -1.0};
  const double w[4] = {-1.0, 3.0, -3.0, 1.0};
  const Unknowns idx{4, 10};
  std::vector<double> v(10, 0.0);
  for (int i1 = 0; i1 < 4; ++i1)
    for (int i2 = i1; i2 < 4; ++i2) {
      const double a = 0.5 * (u[i1] * w[i2] + u[i2] * w[i1]);
      v[static_cast<std::size_t>(idx.index(i1, i2))] = a;
    }
  double norm = 0.0;
  for (double x : v) norm += x * x;
  norm = std::sqrt(norm);
  int imax = 0;
  for (int i = 1; i < 10; ++i)
    if (std::fabs(v[static_cast<std::size_t>(i)]) >
        std::fabs(v[static_cast<std::size_t>(imax)]))
      imax = i;
  const double sgn = v[static_cast<std::size_t>(imax)] < 0.0 ? -1.0 : 1.0;
  for (double& x : v) x *= sgn / norm;
  return v;
}

std::vector<std::vector<double>> order3_family_vectors() {
  const Unknowns idx{3, 6};
  auto form = [&](double a1, double a2, double a3, double b) {
    // Assemble a1 M_left + a2 M_right + a3 M_centered + b M_second as a
    // symmetric matrix over (f_{j-1}, f_j, f_{j+1}).
    double A[3][3] = {};
    auto add_outer = [&](const double r[3], double coef) {
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) A[i][j] += coef * r[i] * r[j];
    };
    const double left[3] = {-1.0, 1.0, 0.0};
    const double right[3] = {0.0, -1.0, 1.0};
    const double cent[3] = {-1.0, 0.0, 1.0};
    const double secd[3] = {1.0, -2.0, 1.0};
    add_outer(left, a1);
    add_outer(right, a2);
    add_outer(cent, a3);
    add_outer(secd, b);
    std::vector<double> v(6, 0.0);
    for (int i1 = 0; i1 < 3; ++i1)
      for (int i2 = i1; i2 < 3; ++i2)
        v[static_cast<std::size_t>(idx.index(i1, i2))] = A[i1][i2];
    double norm = 0.0;
    for (double x : v) norm += x * x;
    norm = std::sqrt(norm);
    for (double& x : v) x /= norm;
    return v;
  };
  // Two independent members of the a3 = -(a1 + a2)/4 family.
  return {form(1.0, -1.0, 0.0, 0.0), form(1.0, 1.0, -0.5, 0.0)};
}

double nullspace_membership_residual(int stencil_points,
                                     const NullspaceTargets& targets,
                                     const std::vector<double>& v,
                                     std::uint64_t seed) {
  int ncols = 0;
  const std::vector<double> flat = assemble_rows(stencil_points, targets, seed, &ncols);
  if (static_cast<int>(v.size()) != ncols)
    throw std::invalid_argument("nullspace_membership_residual: size mismatch");
  const int nrows = static_cast<int>(flat.size()) / ncols;
  double res = 0.0;
  for (int r = 0; r < nrows; ++r) {
    double dot = 0.0;
    for (int c = 0; c < ncols; ++c)
      dot += flat[static_cast<std::size_t>(r * ncols + c)] * v[static_cast<std::size_t>(c)];
    res = std::max(res, std::fabs(dot));
  }
  return res;
}

}  // namespace weno3z
