#include "levystore/reflect.hpp"

#include <cmath>

#include "levystore/errors.hpp"

namespace levystore {

std::pair<std::vector<double>, std::vector<double>> reflect_increments(
    std::span<const double> increments, double w0) {
  if (w0 < 0.0) fail(ErrorCode::invalid_value, "w0: must be >= 0");
  std::vector<double> w(increments.size());
  std::vector<double> l(increments.size());
  double cur = w0, reg = 0.0;
  for (std::size_t i = 0; i < increments.size(); ++i) {
    const double dx = increments[i];
    if (!std::isfinite(dx))
      fail(ErrorCode::numeric_failure, "increments: non-finite value");
    const double unreflected = cur + dx;
    cur = unreflected > 0.0 ? unreflected : 0.0;
    reg += unreflected < 0.0 ? -unreflected : 0.0;
    w[i] = cur;
    l[i] = reg;
  }
  return {std::move(w), std::move(l)};
}

double reflect_netput(double w0, double t0, std::span<const NetputStep> steps,
                      bool down_regime, std::vector<PathPiece>& out) {
  if (w0 < 0.0) fail(ErrorCode::invalid_value, "w0: must be >= 0");
  double w = w0;
  double t = t0;
  for (const auto& step : steps) {
    if (!std::isfinite(step.duration) || !std::isfinite(step.rate) ||
        !std::isfinite(step.jump))
      fail(ErrorCode::numeric_failure, "netput step: non-finite value");
    if (step.duration > 0.0) {
      const double end = w + step.rate * step.duration;
      if (step.rate < 0.0 && end < 0.0) {
        // hits zero at the analytic crossing time, then pinned with the
        // regulator absorbing the remaining descent
        const double hit = w / -step.rate;
        if (hit > 0.0) out.push_back({t, w, step.rate, 0.0, down_regime});
        out.push_back({t + hit, 0.0, 0.0, -end, down_regime});
        w = 0.0;
      } else {
        out.push_back({t, w, step.rate, 0.0, down_regime});
        w = end;
      }
      t += step.duration;
    }
    w += step.jump;
  }
  return w;
}

}  // namespace levystore
