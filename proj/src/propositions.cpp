#include "weno3z/propositions.hpp"

#include <cmath>
#include <random>
#include <sstream>
#include <stdexcept>

namespace weno3z {

namespace {

// Ordering violations are only counted beyond round-off: the ratios are in
// (0, 1] so an absolute tolerance is appropriate.
constexpr double kTieTol = 1e-13;
constexpr double kEqTol = 1e-12;  // Prop 2, tau = 1 branch

double log_uniform(std::mt19937_64& rng, double lo, double hi) {
  std::uniform_real_distribution<double> d(std::log(lo), std::log(hi));
  return std::exp(d(rng));
}

double uniform(std::mt19937_64& rng, double lo, double hi) {
  std::uniform_real_distribution<double> d(lo, hi);
  return d(rng);
}

std::string format_sample(int prop, double tau, double bc, double bd, double q1,
                          double q2, double r1, double r2) {
  std::ostringstream os;
  os.precision(17);
  os << "prop=" << prop << " tau=" << tau << " betaC=" << bc << " betaD=" << bd
     << " q1=" << q1 << " q2=" << q2 << " ratio1=" << r1 << " ratio2=" << r2;
  return os.str();
}

}  // namespace

PropositionReport proposition_check(int prop_id, long sample_count,
                                    std::uint64_t seed) {
  if (prop_id < 1 || prop_id > 4)
    throw std::invalid_argument("proposition_check: prop_id must be 1..4");
  std::mt19937_64 rng(seed + static_cast<std::uint64_t>(prop_id));
  PropositionReport rep;
  rep.prop_id = prop_id;
  rep.samples = sample_count;

  const double e = std::exp(1.0);
  for (long s = 0; s < sample_count; ++s) {
    double tau = 0, bc = 0, bd = 0, q1 = 0, q2 = 0, r1 = 0, r2 = 0;
    bool violated = false;

    switch (prop_id) {
      case 1: {
        // alpha = d (1 + tau / beta^p); 0 < p1 < p2 <= 1, beta_D <= e.
        tau = log_uniform(rng, 1e-6, 1e2);
        bd = log_uniform(rng, 1e-6, 0.999 * e);
        bc = log_uniform(rng, 1e-6, 0.95 * bd);
        q2 = uniform(rng, 0.05, 1.0);
        q1 = uniform(rng, 0.02, 0.95 * q2);
        r1 = (1.0 + tau / std::pow(bd, q1)) / (1.0 + tau / std::pow(bc, q1));
        r2 = (1.0 + tau / std::pow(bd, q2)) / (1.0 + tau / std::pow(bc, q2));
        violated = (r1 - r2) < -kTieTol;  // expect r1 > r2
        break;
      }
      case 2: {
        // alpha = d (1 + tau^p / beta); 1 <= p1 < p2; three tau branches.
        const int branch = static_cast<int>(s % 3);
        if (branch == 0)
          tau = log_uniform(rng, 1e-6, 0.95);
        else if (branch == 1)
          tau = log_uniform(rng, 1.05, 1e2);
        else
          tau = 1.0;
        bd = log_uniform(rng, 1e-6, 1e2);
        bc = log_uniform(rng, 1e-6, 1e2);
        if (bc > bd) std::swap(bc, bd);
        if (bd < 1.05 * bc) bd = 1.05 * bc;
        q1 = uniform(rng, 1.0, 7.0);
        q2 = q1 + uniform(rng, 0.1, 3.0);
        r1 = (1.0 + std::pow(tau, q1) / bd) / (1.0 + std::pow(tau, q1) / bc);
        r2 = (1.0 + std::pow(tau, q2) / bd) / (1.0 + std::pow(tau, q2) / bc);
        if (branch == 0)
          violated = (r2 - r1) < -kTieTol;  // expect r1 < r2
        else if (branch == 1)
          violated = (r1 - r2) < -kTieTol;  // expect r1 > r2
        else
          violated = std::fabs(r1 - r2) > kEqTol;
        break;
      }
      case 3: {
        // alpha = d (1 + c tau / beta); c1 > c2 => ratio(c1) < ratio(c2).
        tau = log_uniform(rng, 1e-6, 1e2);
        bd = log_uniform(rng, 1e-6, 1e2);
        bc = log_uniform(rng, 1e-6, 1e2);
        if (bc > bd) std::swap(bc, bd);
        if (bd < 1.05 * bc) bd = 1.05 * bc;
        q2 = log_uniform(rng, 1e-3, 1e3);
        q1 = q2 * log_uniform(rng, 1.05, 1e2);
        r1 = (1.0 + q1 * tau / bd) / (1.0 + q1 * tau / bc);
        r2 = (1.0 + q2 * tau / bd) / (1.0 + q2 * tau / bc);
        violated = (r2 - r1) < -kTieTol;  // expect r1 < r2
        break;
      }
      case 4: {
        // alpha = d (1 + (tau/beta)^p); p1 > p2 within (0, 1], valid for
        // tau/beta_D above the root e^{-1.2784...} ~ 0.2784 of the proof.
        bd = log_uniform(rng, 1e-6, 1.0);
        bc = log_uniform(rng, 1e-6, 0.95 * bd);
        tau = bd * log_uniform(rng, 0.285, 1e2);
        q2 = uniform(rng, 0.02, 0.93);
        q1 = uniform(rng, q2 + 0.05, 1.0);
        r1 = (1.0 + std::pow(tau / bd, q1)) / (1.0 + std::pow(tau / bc, q1));
        r2 = (1.0 + std::pow(tau / bd, q2)) / (1.0 + std::pow(tau / bc, q2));
        violated = (r2 - r1) < -kTieTol;  // expect r1 < r2
        break;
      }
    }

    if (violated) {
      ++rep.violations;
      if (rep.counterexamples.size() < 16)
        rep.counterexamples.push_back(
            format_sample(prop_id, tau, bc, bd, q1, q2, r1, r2));
    }
  }
  return rep;
}

}  // namespace weno3z
