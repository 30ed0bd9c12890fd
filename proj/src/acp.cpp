#include "weno3z/acp.hpp"

#include <array>
#include <cmath>
#include <random>
#include <span>

#include "weno3z/global_indicators.hpp"
#include "weno3z/stencil_kernels.hpp"

namespace weno3z {

namespace {

// f(x) = (x - xc)^(cp+1) * g(x) + c with g a cubic whose coefficients stay
// away from zero, so that exactly the first cp derivatives vanish at xc and
// the next few are nonzero.
struct ProbeFunction {
  double xc;
  double c0;
  std::array<double, 4> g;
  int cp;

  double operator()(double x) const {
    const double s = x - xc;
    double gx = g[0] + s * (g[1] + s * (g[2] + s * g[3]));
    double lead = 1.0;
    for (int i = 0; i < cp + 1; ++i) lead *= s;
    return lead * gx + c0;
  }
};

double evaluate_quantity(ProbeQuantity q, const StencilWindow& w) {
  switch (q) {
    case ProbeQuantity::Beta2_0: return smoothness_beta(w, 2, 0);
    case ProbeQuantity::Beta2_1: return smoothness_beta(w, 2, 1);
    case ProbeQuantity::Beta3_0: return smoothness_beta(w, 3, 0);
    case ProbeQuantity::Beta3_2: return smoothness_beta(w, 3, 2);
    case ProbeQuantity::Tau3: return tau(w, TauKind::Tau3);
    case ProbeQuantity::TauN: return tau(w, TauKind::TauN);
    case ProbeQuantity::TauCP1: return tau(w, TauKind::TauCP1);
    case ProbeQuantity::TauCP2: return tau(w, TauKind::TauCP2);
    case ProbeQuantity::D22Sq: {
      const double d = finite_delta(w, DeltaTag::D2O2);
      return d * d;
    }
    case ProbeQuantity::D42Sq: {
      const double d = finite_delta(w, DeltaTag::D4O2);
      return d * d;
    }
  }
  return 0.0;
}

// Window shape required by the quantity: {offset, length}.
struct WindowShape {
  int offset;
  int len;
};

WindowShape quantity_window(ProbeQuantity q) {
  switch (q) {
    case ProbeQuantity::Beta3_0:
      return {2, 3};  // needs f_{j-2..j}
    case ProbeQuantity::Beta3_2:
      return {0, 3};  // needs f_{j..j+2}
    case ProbeQuantity::TauCP1:
      return {1, 4};  // f_{j-1..j+2}
    case ProbeQuantity::TauCP2:
    case ProbeQuantity::D42Sq:
      return {2, 5};  // f_{j-2..j+2}
    default:
      return {1, 3};  // f_{j-1..j+1}
  }
}

struct Fit {
  double slope;
  double residual;
};

Fit fit_slope(std::span<const double> log2_dx, std::span<const double> log2_q) {
  const std::size_t m = log2_dx.size();
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < m; ++i) {
    sx += log2_dx[i];
    sy += log2_q[i];
    sxx += log2_dx[i] * log2_dx[i];
    sxy += log2_dx[i] * log2_q[i];
  }
  const double denom = m * sxx - sx * sx;
  const double slope = (m * sxy - sx * sy) / denom;
  const double intercept = (sy - slope * sx) / m;
  double res = 0.0;
  for (std::size_t i = 0; i < m; ++i)
    res = std::max(res, std::fabs(intercept + slope * log2_dx[i] - log2_q[i]));
  return {slope, res};
}

Fit probe_once(ProbeQuantity q, double lambda, int cp, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> mag(0.5, 2.0);
  std::bernoulli_distribution sign(0.5);
  auto draw = [&] { return (sign(rng) ? 1.0 : -1.0) * mag(rng); };
  ProbeFunction f{0.3 + 0.1 * mag(rng), draw(), {draw(), draw(), draw(), draw()}, cp};
  if (cp == 0) {
    // No critical point at xc: add a linear term so f' never vanishes nearby.
    f.g[0] = 0.0;  // unused below; handled by the separate branch
  }

  const WindowShape shape = quantity_window(q);
  std::vector<double> ldx, lq;
  double dx = 0.08;
  for (int level = 0; level < 5; ++level, dx *= 0.5) {
    const double xj = f.xc - lambda * dx;
    std::array<double, 5> vals{};
    for (int i = 0; i < shape.len; ++i) {
      const double xi = xj + (i - shape.offset) * dx;
      double v;
      if (cp == 0) {
        // Generic smooth point: nonzero slope plus curvature terms.
        const double s = xi - f.xc;
        v = f.c0 + 1.3 * s + f.g[1] * s * s + f.g[2] * s * s * s +
            f.g[3] * s * s * s * s;
      } else {
        v = f(xi);
      }
      vals[static_cast<std::size_t>(i)] = v;
    }
    const StencilWindow w{
        std::span<const double>(vals.data(), static_cast<std::size_t>(shape.len)),
        shape.offset, dx};
    const double value = evaluate_quantity(q, w);
    if (value <= 0.0) return {0.0, 1e30};  // degenerate draw
    ldx.push_back(std::log2(dx));
    lq.push_back(std::log2(value));
  }
  return fit_slope(ldx, lq);
}

}  // namespace

const char* probe_quantity_name(ProbeQuantity q) {
  switch (q) {
    case ProbeQuantity::Beta2_0: return "beta2_0";
    case ProbeQuantity::Beta2_1: return "beta2_1";
    case ProbeQuantity::Beta3_0: return "beta3_0";
    case ProbeQuantity::Beta3_2: return "beta3_2";
    case ProbeQuantity::Tau3: return "tau3";
    case ProbeQuantity::TauN: return "tau_n";
    case ProbeQuantity::TauCP1: return "tau_cp1";
    case ProbeQuantity::TauCP2: return "tau_cp2";
    case ProbeQuantity::D22Sq: return "d22_sq";
    case ProbeQuantity::D42Sq: return "d42_sq";
  }
  return "?";
}

OrderProbeResult acp_order_probe(ProbeQuantity quantity, double lambda,
                                 int cp_order, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  OrderProbeResult out;
  out.quantity = quantity;
  out.lambda = lambda;
  out.cp_order = cp_order;

  double slopes[3];
  double residuals[3];
  for (int d = 0; d < 3; ++d) {
    Fit fit{0.0, 1e30};
    for (int attempt = 0; attempt < 8 && fit.residual > 1e29; ++attempt)
      fit = probe_once(quantity, lambda, cp_order, rng);
    slopes[d] = fit.slope;
    residuals[d] = fit.residual;
  }
  out.slope = (slopes[0] + slopes[1] + slopes[2]) / 3.0;
  out.residual = std::max({residuals[0], residuals[1], residuals[2]});
  const double spread = std::max({slopes[0], slopes[1], slopes[2]}) -
                        std::min({slopes[0], slopes[1], slopes[2]});
  out.conclusive = spread <= 0.3 && out.residual < 1.0;
  return out;
}

}  // namespace weno3z
