#pragma once

#include <optional>

#include "levystore/jump_distribution.hpp"

namespace levystore {

// Spectrally positive Levy input for up periods, in natural parameterization:
// drift + Brownian part + finite-activity compound Poisson jumps. The netput
// drifts at -drift_rate per unit time, so
//
//   phi(a) = log E e^{-a X_u(1)}
//          = drift_rate*a + brownian_var*a^2/2 + jump_rate*(lst_B(a) - 1).
//
// Relative to the truncated-compensator form
//   phi(a) = -c*a + s2*a^2/2 + \int (e^{-ax} - 1 + ax 1{x<=1}) nu(dx)
// with nu = jump_rate * F_B, the conversion is
//   c = -(drift_rate - jump_rate * E[B; B<=1]),   s2 = brownian_var,
// which is well defined because every supported jump law has finite mean.
struct UpProcessSpec {
  double drift_rate = 1.0;     // netput drift is -drift_rate
  double brownian_var = 0.0;   // sigma_u^2
  double jump_rate = 0.0;      // lambda_u
  std::optional<JumpDistribution> jump_dist;

  void validate() const;

  // phi(a); phi(0) = 0 exactly, convex
  double phi(double alpha) const;

  // phi'(0) = drift_rate - jump_rate * E B = -E X_u(1)
  double phi_prime0() const;

  // phi''(0) = brownian_var + jump_rate * E B^2
  double phi_second0() const;

  bool stable() const { return phi_prime0() > 0.0; }

  // a phi'(0)/phi(a): transform of sup_{s>=0} X_u(s) and of the stationary
  // reflected one-regime workload. Removable singularity at a=0 returns 1;
  // a first-order expansion is used below 1e-8 to avoid cancellation.
  double pk_lst(double alpha) const;

  bool operator==(const UpProcessSpec&) const = default;
};

// Subordinator input for down periods: nonnegative drift plus finite-activity
// compound Poisson jumps, with
//
//   eta(a) = c_d*a + jump_rate*(1 - lst_B(a)),   E e^{-a X_d(1)} = e^{-eta(a)}.
struct DownProcessSpec {
  double drift = 0.0;       // c_d >= 0
  double jump_rate = 0.0;   // lambda_d
  std::optional<JumpDistribution> jump_dist;

  void validate() const;

  // eta(a); eta(0) = 0, concave nondecreasing
  double eta(double alpha) const;

  // eta'(0) = c_d + jump_rate * E B = E X_d(1)
  double eta_prime0() const;

  // eta''(0) = -jump_rate * E B^2
  double eta_second0() const;

  // eta(a)/(a eta'(0)): transform of the generalized stationary excess
  // lifetime law of the subordinator jumps (point mass at 0 weighted by the
  // drift share). 1 at a=0, first-order expansion below 1e-8.
  double excess_lst(double alpha) const;

  bool operator==(const DownProcessSpec&) const = default;
};

// psi(g1, g2) = phi(g1) - eta(g2); psi(a,0) = phi(a), psi(0,a) = -eta(a).
double psi_two(const UpProcessSpec& up, const DownProcessSpec& down,
               double gamma1, double gamma2);

}  // namespace levystore
