#pragma once

#include <cstddef>
#include <iosfwd>
#include <utility>
#include <vector>

#include "levystore/process_spec.hpp"

namespace levystore {

// Empirical transform tabulated on a fixed alpha grid. Lookups are exact
// grid-point matches; identities are never evaluated between grid points, so
// no interpolation error enters the residuals.
struct TransformTable {
  std::vector<double> alphas;
  std::vector<double> values;
  std::vector<double> std_errors;

  std::size_t index_of(double alpha) const;
  double value_at(double alpha) const { return values[index_of(alpha)]; }
  double se_at(double alpha) const { return std_errors[index_of(alpha)]; }
};

// pi_ell = 1 - (1 + eta'(0)/phi'(0)) p_d, the weight of the no-down-time
// component in the workload mixture.
double pi_ell(double p_d, double phi_prime0, double eta_prime0);

// pi = eta'(0)/(eta'(0) + phi'(0)); equals the traffic intensity eta'(0)/r
// in the special case phi(a) = a r - eta(a).
double pi_ratio(double phi_prime0, double eta_prime0);

struct DecompositionInputs {
  UpProcessSpec up;
  DownProcessSpec down;
  double p_d = 0.0;
  double p_d_se = 0.0;
  TransformTable lst_wd;  // empirical E e^{-alpha W_d}

  // checks the occupancy bound p_d <= phi'(0)/(eta'(0)+phi'(0)) and the
  // derived pi_ell range, both with 3-standard-error slack
  void validate() const;
};

// Predicted steady-state transform
//   E e^{-a W} = pi_ell pk(a)
//              + (1-pi_ell) (1 - pi + pi excess(a) pk(a)) E e^{-a W_d}.
double decomp_rhs(double alpha, const DecompositionInputs& inputs);

// Signed residual of the linear form of the same law:
//   phi(a) E e^{-aW} - (phi(a)+eta(a)) p_d E e^{-aW_d}
//     - a ((1-p_d) phi'(0) - p_d eta'(0)),
// zero in exact arithmetic under the decomposition hypotheses. Equals
// phi(a) * rv_form_check(a, ...) algebraically.
double identity_residual(double alpha, const DecompositionInputs& inputs,
                         const TransformTable& lst_w);

// First-order-propagated standard error of identity_residual, treating the
// three empirical inputs as independent (documented approximation).
double identity_residual_se(double alpha, const DecompositionInputs& inputs,
                            const TransformTable& lst_w);

// Both sides of the special-case identity that holds when
// phi(a) = a r - eta(a):
//   1 - pi + pi (eta(a)/(eta'(0) a)) (phi'(0) a / phi(a)) = a phi'(0)/phi(a).
std::pair<double, double> corollary_identity(double alpha,
                                             const DownProcessSpec& down,
                                             double r);

// Residual of the embedded-epoch relation
//   (E e^{-aW_-} - E e^{-aW_+}) / (a (E W_+ - E W_-))
//     = (eta(a)/(a eta'(0))) E e^{-a W_d}.
double pm_residual(double alpha, const DownProcessSpec& down,
                   double lst_w_minus, double lst_w_plus, double ew_minus,
                   double ew_plus, double lst_wd);

// Residual lst_w(a) - transform of I_l W_u + (1-I_l)(I (W_u + Y_e) + W_d),
// coded through the mixture structure as an independent re-expression of
// decomp_rhs for cross-validation.
double rv_form_check(double alpha, const DecompositionInputs& inputs,
                     const TransformTable& lst_w);

struct DecompositionRow {
  double alpha = 0.0;
  double empirical = 0.0;
  double predicted = 0.0;
  double identity_residual = 0.0;
  double pm_residual = 0.0;
  double se = 0.0;  // propagated SE of the identity residual
  bool pass = true;
};

struct DecompositionReport {
  std::vector<DecompositionRow> rows;

  void write_csv(std::ostream& os) const;
};

}  // namespace levystore
