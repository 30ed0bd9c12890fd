#pragma once
// Euler equation kernels shared by the 1-D and 2-D solvers: primitive
// decoding, Steger-Warming flux vector splitting and the characteristic
// eigenvector pairs used for projection.
//
// 2-D sweeps use the pencil convention (rho, mom_n, mom_t, E) where "n" is
// the sweep direction; y-sweeps pack (rho, rho*v, rho*u, E) and reuse the
// same kernels, which keeps the two directions arithmetically identical.

#include <array>
#include <cmath>
#include <stdexcept>
#include <string>

namespace weno3z {

using Vec3 = std::array<double, 3>;
using Vec4 = std::array<double, 4>;

/// Thrown when a state decodes to non-physical density/pressure or a stage
/// produces non-finite values; the solver wraps it into a failure record.
struct NonPhysicalState : std::runtime_error {
  explicit NonPhysicalState(const std::string& what) : std::runtime_error(what) {}
};

struct Prim1D {
  double rho, u, p;
};
struct Prim2D {
  double rho, un, ut, p;
};

inline Prim1D decode_prim(const Vec3& c, double gamma) {
  const double rho = c[0];
  if (!(rho > 0.0))
    throw NonPhysicalState("non-positive density " + std::to_string(rho));
  const double u = c[1] / rho;
  const double p = (gamma - 1.0) * (c[2] - 0.5 * rho * u * u);
  if (!(p > 0.0))
    throw NonPhysicalState("non-positive pressure " + std::to_string(p));
  return {rho, u, p};
}

inline Prim2D decode_prim(const Vec4& c, double gamma) {
  const double rho = c[0];
  if (!(rho > 0.0))
    throw NonPhysicalState("non-positive density " + std::to_string(rho));
  const double un = c[1] / rho;
  const double ut = c[2] / rho;
  const double p = (gamma - 1.0) * (c[3] - 0.5 * rho * (un * un + ut * ut));
  if (!(p > 0.0))
    throw NonPhysicalState("non-positive pressure " + std::to_string(p));
  return {rho, un, ut, p};
}

inline Vec3 encode_cons(double rho, double u, double p, double gamma) {
  return {rho, rho * u, p / (gamma - 1.0) + 0.5 * rho * u * u};
}

inline Vec4 encode_cons(double rho, double un, double ut, double p, double gamma) {
  return {rho, rho * un, rho * ut,
          p / (gamma - 1.0) + 0.5 * rho * (un * un + ut * ut)};
}

inline Vec3 euler_flux(const Vec3& c, double gamma) {
  const Prim1D w = decode_prim(c, gamma);
  return {c[1], c[1] * w.u + w.p, w.u * (c[2] + w.p)};
}

inline Vec4 euler_flux(const Vec4& c, double gamma) {
  const Prim2D w = decode_prim(c, gamma);
  return {c[1], c[1] * w.un + w.p, c[1] * w.ut, w.un * (c[3] + w.p)};
}

namespace detail {
// lambda_pm = (lambda +- sqrt(lambda^2 + delta^2)) / 2; delta = 0 reproduces
// the exact split (lambda +- |lambda|)/2.
inline void split_eig(double lam, double delta, double& lp, double& lm) {
  const double mag = (delta > 0.0) ? std::sqrt(lam * lam + delta * delta)
                                   : std::fabs(lam);
  lp = 0.5 * (lam + mag);
  lm = 0.5 * (lam - mag);
}
}  // namespace detail

/// Steger-Warming split of the 1-D Euler flux. F_plus + F_minus = F(U).
inline void steger_warming_split(const Vec3& c, double gamma, Vec3& f_plus,
                                 Vec3& f_minus, double eig_smoothing = 0.0) {
  const Prim1D w = decode_prim(c, gamma);
  const double a = std::sqrt(gamma * w.p / w.rho);
  double lp[3], lm[3];
  detail::split_eig(w.u, eig_smoothing, lp[0], lm[0]);
  detail::split_eig(w.u + a, eig_smoothing, lp[1], lm[1]);
  detail::split_eig(w.u - a, eig_smoothing, lp[2], lm[2]);
  const double gm1 = gamma - 1.0;
  const double fac = w.rho / (2.0 * gamma);
  const double wcoef = (3.0 - gamma) * a * a / (2.0 * gm1);
  auto fill = [&](const double l[3], Vec3& f) {
    f[0] = fac * (2.0 * gm1 * l[0] + l[1] + l[2]);
    f[1] = fac * (2.0 * gm1 * l[0] * w.u + l[1] * (w.u + a) + l[2] * (w.u - a));
    f[2] = fac * (gm1 * l[0] * w.u * w.u + 0.5 * l[1] * (w.u + a) * (w.u + a) +
                  0.5 * l[2] * (w.u - a) * (w.u - a) + wcoef * (l[1] + l[2]));
  };
  fill(lp, f_plus);
  fill(lm, f_minus);
}

/// Steger-Warming split of the pencil-form 2-D Euler flux.
inline void steger_warming_split(const Vec4& c, double gamma, Vec4& f_plus,
                                 Vec4& f_minus, double eig_smoothing = 0.0) {
  const Prim2D w = decode_prim(c, gamma);
  const double a = std::sqrt(gamma * w.p / w.rho);
  double lp[3], lm[3];
  detail::split_eig(w.un, eig_smoothing, lp[0], lm[0]);
  detail::split_eig(w.un + a, eig_smoothing, lp[1], lm[1]);
  detail::split_eig(w.un - a, eig_smoothing, lp[2], lm[2]);
  const double gm1 = gamma - 1.0;
  const double fac = w.rho / (2.0 * gamma);
  const double q2 = w.un * w.un + w.ut * w.ut;
  const double wcoef = (3.0 - gamma) * a * a / (2.0 * gm1);
  auto fill = [&](const double l[3], Vec4& f) {
    const double mass = 2.0 * gm1 * l[0] + l[1] + l[2];
    f[0] = fac * mass;
    f[1] = fac * (2.0 * gm1 * l[0] * w.un + l[1] * (w.un + a) + l[2] * (w.un - a));
    f[2] = fac * mass * w.ut;
    f[3] = fac * (gm1 * l[0] * q2 +
                  0.5 * l[1] * ((w.un + a) * (w.un + a) + w.ut * w.ut) +
                  0.5 * l[2] * ((w.un - a) * (w.un - a) + w.ut * w.ut) +
                  wcoef * (l[1] + l[2]));
  };
  fill(lp, f_plus);
  fill(lm, f_minus);
}

/// Left/right eigenvector pair of the 1-D flux Jacobian at a given state.
/// Rows of L are ordered (u-a, u, u+a); unproject(project(x)) == x.
struct EigenSystem1D {
  double L[3][3];
  double R[3][3];
};

inline EigenSystem1D eigensystem(const Vec3& c, double gamma) {
  const Prim1D w = decode_prim(c, gamma);
  const double a = std::sqrt(gamma * w.p / w.rho);
  const double H = (c[2] + w.p) / w.rho;
  const double u = w.u;
  const double b1 = (gamma - 1.0) / (a * a);
  const double b2 = 0.5 * b1 * u * u;
  EigenSystem1D e;
  const double Rm[3][3] = {{1.0, 1.0, 1.0},
                           {u - a, u, u + a},
                           {H - u * a, 0.5 * u * u, H + u * a}};
  const double Lm[3][3] = {
      {0.5 * (b2 + u / a), 0.5 * (-b1 * u - 1.0 / a), 0.5 * b1},
      {1.0 - b2, b1 * u, -b1},
      {0.5 * (b2 - u / a), 0.5 * (-b1 * u + 1.0 / a), 0.5 * b1}};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      e.R[i][j] = Rm[i][j];
      e.L[i][j] = Lm[i][j];
    }
  return e;
}

/// Pencil-form 2-D eigensystem; field order (un-a, entropy, shear, un+a).
struct EigenSystem2D {
  double L[4][4];
  double R[4][4];
};

inline EigenSystem2D eigensystem(const Vec4& c, double gamma) {
  const Prim2D w = decode_prim(c, gamma);
  const double a = std::sqrt(gamma * w.p / w.rho);
  const double H = (c[3] + w.p) / w.rho;
  const double un = w.un, ut = w.ut;
  const double q2 = 0.5 * (un * un + ut * ut);
  const double b1 = (gamma - 1.0) / (a * a);
  const double b2 = b1 * q2;
  EigenSystem2D e;
  const double Rm[4][4] = {{1.0, 1.0, 0.0, 1.0},
                           {un - a, un, 0.0, un + a},
                           {ut, ut, 1.0, ut},
                           {H - un * a, q2, ut, H + un * a}};
  const double Lm[4][4] = {
      {0.5 * (b2 + un / a), 0.5 * (-b1 * un - 1.0 / a), -0.5 * b1 * ut, 0.5 * b1},
      {1.0 - b2, b1 * un, b1 * ut, -b1},
      {-ut, 0.0, 1.0, 0.0},
      {0.5 * (b2 - un / a), 0.5 * (-b1 * un + 1.0 / a), -0.5 * b1 * ut, 0.5 * b1}};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      e.R[i][j] = Rm[i][j];
      e.L[i][j] = Lm[i][j];
    }
  return e;
}

inline Vec3 project(const EigenSystem1D& e, const Vec3& x) {
  Vec3 y{};
  for (int i = 0; i < 3; ++i)
    y[i] = e.L[i][0] * x[0] + e.L[i][1] * x[1] + e.L[i][2] * x[2];
  return y;
}

inline Vec3 unproject(const EigenSystem1D& e, const Vec3& x) {
  Vec3 y{};
  for (int i = 0; i < 3; ++i)
    y[i] = e.R[i][0] * x[0] + e.R[i][1] * x[1] + e.R[i][2] * x[2];
  return y;
}

inline Vec4 project(const EigenSystem2D& e, const Vec4& x) {
  Vec4 y{};
  for (int i = 0; i < 4; ++i)
    y[i] = e.L[i][0] * x[0] + e.L[i][1] * x[1] + e.L[i][2] * x[2] + e.L[i][3] * x[3];
  return y;
}

inline Vec4 unproject(const EigenSystem2D& e, const Vec4& x) {
  Vec4 y{};
  for (int i = 0; i < 4; ++i)
    y[i] = e.R[i][0] * x[0] + e.R[i][1] * x[1] + e.R[i][2] * x[2] + e.R[i][3] * x[3];
  return y;
}

/// Roe-averaged state (available behind a config switch; the default
/// interface average is plain arithmetic).
inline Vec3 roe_average(const Vec3& cl, const Vec3& cr, double gamma) {
  const Prim1D wl = decode_prim(cl, gamma);
  const Prim1D wr = decode_prim(cr, gamma);
  const double sl = std::sqrt(wl.rho), sr = std::sqrt(wr.rho);
  const double rho = sl * sr;
  const double u = (sl * wl.u + sr * wr.u) / (sl + sr);
  const double Hl = (cl[2] + wl.p) / wl.rho, Hr = (cr[2] + wr.p) / wr.rho;
  const double H = (sl * Hl + sr * Hr) / (sl + sr);
  const double p = (H - 0.5 * u * u) * rho * (gamma - 1.0) / gamma;
  return encode_cons(rho, u, p, gamma);
}

inline Vec4 roe_average(const Vec4& cl, const Vec4& cr, double gamma) {
  const Prim2D wl = decode_prim(cl, gamma);
  const Prim2D wr = decode_prim(cr, gamma);
  const double sl = std::sqrt(wl.rho), sr = std::sqrt(wr.rho);
  const double rho = sl * sr;
  const double un = (sl * wl.un + sr * wr.un) / (sl + sr);
  const double ut = (sl * wl.ut + sr * wr.ut) / (sl + sr);
  const double Hl = (cl[3] + wl.p) / wl.rho, Hr = (cr[3] + wr.p) / wr.rho;
  const double H = (sl * Hl + sr * Hr) / (sl + sr);
  const double p =
      (H - 0.5 * (un * un + ut * ut)) * rho * (gamma - 1.0) / gamma;
  return encode_cons(rho, un, ut, p, gamma);
}

}  // namespace weno3z
