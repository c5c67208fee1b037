#include "levystore/process_spec.hpp"

#include <cmath>

#include "levystore/errors.hpp"

namespace levystore {

namespace {
constexpr double kTaylorCutoff = 1e-8;

void require_nonneg_alpha(double alpha) {
  if (alpha < 0.0) fail(ErrorCode::invalid_value, "alpha: must be >= 0");
}
}  // namespace

void UpProcessSpec::validate() const {
  if (brownian_var < 0.0)
    fail(ErrorCode::invalid_value, "up.brownian_var: must be >= 0");
  if (jump_rate < 0.0)
    fail(ErrorCode::invalid_value, "up.jump_rate: must be >= 0");
  if (jump_rate > 0.0 && !jump_dist.has_value())
    fail(ErrorCode::missing_field,
         "up.jump_dist: required when jump_rate > 0");
  if (!(drift_rate > 0.0) && !(brownian_var > 0.0))
    fail(ErrorCode::invalid_value,
         "up: drift_rate > 0 or brownian_var > 0 required (the up process "
         "must not be a subordinator)");
}

double UpProcessSpec::phi(double alpha) const {
  require_nonneg_alpha(alpha);
  if (alpha == 0.0) return 0.0;
  double value = drift_rate * alpha + 0.5 * brownian_var * alpha * alpha;
  if (jump_rate > 0.0) value += jump_rate * (jump_dist->lst(alpha) - 1.0);
  return value;
}

double UpProcessSpec::phi_prime0() const {
  return drift_rate - (jump_rate > 0.0 ? jump_rate * jump_dist->mean() : 0.0);
}

double UpProcessSpec::phi_second0() const {
  return brownian_var +
         (jump_rate > 0.0 ? jump_rate * jump_dist->second_moment() : 0.0);
}

double UpProcessSpec::pk_lst(double alpha) const {
  require_nonneg_alpha(alpha);
  const double d0 = phi_prime0();
  if (!(d0 > 0.0))
    fail(ErrorCode::stability_violation,
         "up: pk transform requires a stable spec (phi'(0) > 0)");
  if (alpha == 0.0) return 1.0;
  if (alpha < kTaylorCutoff) return 1.0 - 0.5 * alpha * phi_second0() / d0;
  return alpha * d0 / phi(alpha);
}

void DownProcessSpec::validate() const {
  if (drift < 0.0) fail(ErrorCode::invalid_value, "down.drift: must be >= 0");
  if (jump_rate < 0.0)
    fail(ErrorCode::invalid_value, "down.jump_rate: must be >= 0");
  if (jump_rate > 0.0 && !jump_dist.has_value())
    fail(ErrorCode::missing_field,
         "down.jump_dist: required when jump_rate > 0");
}

double DownProcessSpec::eta(double alpha) const {
  require_nonneg_alpha(alpha);
  if (alpha == 0.0) return 0.0;
  double value = drift * alpha;
  if (jump_rate > 0.0) value += jump_rate * (1.0 - jump_dist->lst(alpha));
  return value;
}

double DownProcessSpec::eta_prime0() const {
  return drift + (jump_rate > 0.0 ? jump_rate * jump_dist->mean() : 0.0);
}

double DownProcessSpec::eta_second0() const {
  return -(jump_rate > 0.0 ? jump_rate * jump_dist->second_moment() : 0.0);
}

double DownProcessSpec::excess_lst(double alpha) const {
  require_nonneg_alpha(alpha);
  const double d0 = eta_prime0();
  if (!(d0 > 0.0))
    fail(ErrorCode::invalid_value,
         "down: excess transform requires eta'(0) > 0");
  if (alpha == 0.0) return 1.0;
  if (alpha < kTaylorCutoff) return 1.0 + 0.5 * alpha * eta_second0() / d0;
  return eta(alpha) / (alpha * d0);
}

double psi_two(const UpProcessSpec& up, const DownProcessSpec& down,
               double gamma1, double gamma2) {
  if (gamma1 < 0.0 || gamma2 < 0.0)
    fail(ErrorCode::invalid_value, "gamma: must be >= 0");
  return up.phi(gamma1) - down.eta(gamma2);
}

}  // namespace levystore
