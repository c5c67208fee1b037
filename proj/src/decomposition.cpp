#include "levystore/decomposition.hpp"

#include <cmath>
#include <ostream>
#include <string>

#include "levystore/csv.hpp"
#include "levystore/errors.hpp"

namespace levystore {

std::size_t TransformTable::index_of(double alpha) const {
  for (std::size_t i = 0; i < alphas.size(); ++i)
    if (std::abs(alphas[i] - alpha) <= 1e-12) return i;
  fail(ErrorCode::invalid_value,
       "transform table: alpha " + std::to_string(alpha) +
           " is not a grid point (identities are evaluated at grid points "
           "only)");
}

double pi_ell(double p_d, double phi_prime0, double eta_prime0) {
  if (!(phi_prime0 > 0.0))
    fail(ErrorCode::stability_violation, "phi_prime0: must be > 0");
  return 1.0 - (1.0 + eta_prime0 / phi_prime0) * p_d;
}

double pi_ratio(double phi_prime0, double eta_prime0) {
  if (!(phi_prime0 + eta_prime0 > 0.0))
    fail(ErrorCode::invalid_value,
         "pi_ratio: phi_prime0 + eta_prime0 must be > 0");
  return eta_prime0 / (eta_prime0 + phi_prime0);
}

void DecompositionInputs::validate() const {
  up.validate();
  down.validate();
  if (p_d < 0.0 || p_d > 1.0)
    fail(ErrorCode::invalid_value, "p_d: must be in [0, 1]");
  const double d_up = up.phi_prime0();
  const double d_down = down.eta_prime0();
  if (!(d_up > 0.0))
    fail(ErrorCode::stability_violation,
         "up: decomposition requires a stable up process (phi'(0) > 0)");
  const double bound = d_up / (d_down + d_up);
  if (p_d > bound + 3.0 * p_d_se)
    fail(ErrorCode::invalid_value,
         "p_d: " + std::to_string(p_d) +
             " exceeds the occupancy bound phi'(0)/(eta'(0)+phi'(0)) = " +
             std::to_string(bound) + " by more than 3 standard errors");
  const double pl = pi_ell(p_d, d_up, d_down);
  const double pl_se = (1.0 + d_down / d_up) * p_d_se;
  if (pl < -3.0 * pl_se || pl > 1.0)
    fail(ErrorCode::invalid_value,
         "pi_ell: " + std::to_string(pl) + " outside [-3 SE, 1]");
}

double decomp_rhs(double alpha, const DecompositionInputs& inputs) {
  inputs.validate();
  if (alpha < 0.0) fail(ErrorCode::invalid_value, "alpha: must be >= 0");
  const double d_up = inputs.up.phi_prime0();
  const double d_down = inputs.down.eta_prime0();
  const double pl = pi_ell(inputs.p_d, d_up, d_down);
  const double pk = inputs.up.pk_lst(alpha);
  if (inputs.p_d == 0.0) return pl * pk;  // no down time: pure pk transform
  const double pi = pi_ratio(d_up, d_down);
  const double excess = inputs.down.excess_lst(alpha);
  const double wd = alpha == 0.0 ? 1.0 : inputs.lst_wd.value_at(alpha);
  return pl * pk + (1.0 - pl) * (1.0 - pi + pi * excess * pk) * wd;
}

double identity_residual(double alpha, const DecompositionInputs& inputs,
                         const TransformTable& lst_w) {
  inputs.validate();
  if (alpha < 0.0) fail(ErrorCode::invalid_value, "alpha: must be >= 0");
  if (alpha == 0.0) return 0.0;
  const double fee = inputs.up.phi(alpha);
  const double gee = inputs.down.eta(alpha);
  const double drift = (1.0 - inputs.p_d) * inputs.up.phi_prime0() -
                       inputs.p_d * inputs.down.eta_prime0();
  return fee * lst_w.value_at(alpha) -
         (fee + gee) * inputs.p_d * inputs.lst_wd.value_at(alpha) -
         alpha * drift;
}

double identity_residual_se(double alpha, const DecompositionInputs& inputs,
                            const TransformTable& lst_w) {
  if (alpha == 0.0) return 0.0;
  const double fee = inputs.up.phi(alpha);
  const double gee = inputs.down.eta(alpha);
  const double wd = inputs.lst_wd.value_at(alpha);
  // d/dp_d of the residual: -(phi+eta) wd + alpha (phi'(0)+eta'(0))
  const double dp = -(fee + gee) * wd +
                    alpha * (inputs.up.phi_prime0() + inputs.down.eta_prime0());
  const double v1 = fee * lst_w.se_at(alpha);
  const double v2 = (fee + gee) * inputs.p_d * inputs.lst_wd.se_at(alpha);
  const double v3 = dp * inputs.p_d_se;
  return std::sqrt(v1 * v1 + v2 * v2 + v3 * v3);
}

std::pair<double, double> corollary_identity(double alpha,
                                             const DownProcessSpec& down,
                                             double r) {
  down.validate();
  if (!(alpha > 0.0)) fail(ErrorCode::invalid_value, "alpha: must be > 0");
  const double d_down = down.eta_prime0();
  if (!(r > d_down))
    fail(ErrorCode::stability_violation,
         "r: must exceed eta'(0) for the special-case identity (stability)");
  // phi(a) = a r - eta(a), so phi'(0) = r - eta'(0)
  const double fee = alpha * r - down.eta(alpha);
  const double d_up = r - d_down;
  const double pk = alpha * d_up / fee;
  const double rhs = pk;
  double lhs;
  if (d_down > 0.0) {
    const double pi = d_down / r;
    lhs = 1.0 - pi + pi * down.excess_lst(alpha) * pk;
  } else {
    lhs = 1.0;  // pure-rate output with no down input: both sides are 1
  }
  return {lhs, rhs};
}

double pm_residual(double alpha, const DownProcessSpec& down,
                   double lst_w_minus, double lst_w_plus, double ew_minus,
                   double ew_plus, double lst_wd) {
  down.validate();
  if (!(alpha > 0.0)) fail(ErrorCode::invalid_value, "alpha: must be > 0");
  if (ew_plus == ew_minus)
    fail(ErrorCode::invalid_value,
         "pm_residual: E W_+ equals E W_-, embedded relation undefined");
  const double lhs =
      (lst_w_minus - lst_w_plus) / (alpha * (ew_plus - ew_minus));
  const double rhs = down.excess_lst(alpha) * lst_wd;
  return lhs - rhs;
}

double rv_form_check(double alpha, const DecompositionInputs& inputs,
                     const TransformTable& lst_w) {
  inputs.validate();
  if (alpha < 0.0) fail(ErrorCode::invalid_value, "alpha: must be >= 0");
  const double d_up = inputs.up.phi_prime0();
  const double d_down = inputs.down.eta_prime0();
  const double pl = pi_ell(inputs.p_d, d_up, d_down);
  const double lst_wu = inputs.up.pk_lst(alpha);

  // transform of I_l W_u + (1-I_l)(I (W_u + Y_e) + W_d), built from the
  // mixture/convolution structure term by term
  const double pi = inputs.p_d == 0.0 ? 0.0 : pi_ratio(d_up, d_down);
  const double lst_ye = inputs.p_d == 0.0 || d_down == 0.0
                            ? 1.0
                            : inputs.down.excess_lst(alpha);
  const double lst_wu_plus_ye = lst_wu * lst_ye;                // W_u + Y_e
  const double lst_inner = pi * lst_wu_plus_ye + (1.0 - pi);    // I(W_u+Y_e)
  const double lst_wd =
      alpha == 0.0 || inputs.p_d == 0.0 ? 1.0 : inputs.lst_wd.value_at(alpha);
  const double lst_branch = lst_inner * lst_wd;  // I(W_u+Y_e) + W_d
  const double lst_mix = pl * lst_wu + (1.0 - pl) * lst_branch;
  return lst_w.value_at(alpha) - lst_mix;
}

void DecompositionReport::write_csv(std::ostream& os) const {
  os << "alpha,empirical,predicted,identity_residual,pm_residual,se,pass\n";
  for (const auto& row : rows)
    os << csv_num(row.alpha) << ',' << csv_num(row.empirical) << ','
       << csv_num(row.predicted) << ',' << csv_num(row.identity_residual)
       << ',' << csv_num(row.pm_residual) << ',' << csv_num(row.se) << ','
       << (row.pass ? 1 : 0) << '\n';
}

}  // namespace levystore
