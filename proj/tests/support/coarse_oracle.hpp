#pragma once

// Test-only reference simulator. Discrete-time random walk at a fixed step,
// deliberately independent of the library's event-driven path machinery:
// regime switches, jump arrivals and reflection all happen at step
// resolution, and randomness comes from std::mt19937_64 rather than the
// library streams. Used to cross-check ergodic transform estimates.

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

namespace coarse_oracle {

struct Params {
  // up-period netput: -r*dt plus compound Poisson jumps, exp(mean) sizes
  double r = 1.0;
  double lambda_u = 0.5;
  double jump_mean_u = 1.0;
  // down-period subordinator: c_d*dt plus compound Poisson jumps
  double c_d = 0.0;
  double lambda_d = 0.5;
  double jump_mean_d = 1.0;
  // renewal alternation durations, exponential means (down first)
  double down_duration_mean = 1.0;
  double up_duration_mean = 3.0;
  double w0 = 0.0;
};

struct Result {
  double lst_wd = 0.0;      // time average of e^{-alpha W} over down time
  double lst_w = 0.0;       // time average of e^{-alpha W} overall
  double p_d = 0.0;         // fraction of time in down regime
  double down_time = 0.0;
};

inline Result run_replica(const Params& p, double alpha, double horizon,
                          double step, double burn_in_fraction,
                          std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  std::exponential_distribution<double> size_u(1.0 / p.jump_mean_u);
  std::exponential_distribution<double> size_d(1.0 / p.jump_mean_d);
  std::exponential_distribution<double> dur_down(1.0 / p.down_duration_mean);
  std::exponential_distribution<double> dur_up(1.0 / p.up_duration_mean);
  std::poisson_distribution<int> count_u(p.lambda_u * step);
  std::poisson_distribution<int> count_d(p.lambda_d * step);

  double w = p.w0;
  bool down = true;
  double remaining = dur_down(gen);
  const double t_burn = burn_in_fraction * horizon;

  Result out;
  double sum_wd = 0.0, sum_w = 0.0, measured = 0.0, down_time = 0.0;
  const long n_steps = static_cast<long>(horizon / step);
  for (long i = 0; i < n_steps; ++i) {
    const double t = i * step;
    const double w_left = w;
    if (down) {
      double inc = p.c_d * step;
      int k = count_d(gen);
      for (int j = 0; j < k; ++j) inc += size_d(gen);
      w += inc;
    } else {
      double inc = -p.r * step;
      int k = count_u(gen);
      for (int j = 0; j < k; ++j) inc += size_u(gen);
      w = std::max(w + inc, 0.0);
    }
    if (t >= t_burn) {
      measured += step;
      const double e = std::exp(-alpha * w_left);
      sum_w += e * step;
      if (down) {
        sum_wd += e * step;
        down_time += step;
      }
    }
    remaining -= step;
    if (remaining <= 0.0) {
      down = !down;
      remaining = down ? dur_down(gen) : dur_up(gen);
    }
  }
  out.lst_wd = down_time > 0.0 ? sum_wd / down_time : 0.0;
  out.lst_w = measured > 0.0 ? sum_w / measured : 0.0;
  out.p_d = measured > 0.0 ? down_time / measured : 0.0;
  out.down_time = down_time;
  return out;
}

struct Aggregate {
  double mean = 0.0;
  double se = 0.0;
};

inline Aggregate mean_se(const std::vector<double>& xs) {
  Aggregate a;
  const double n = static_cast<double>(xs.size());
  for (double x : xs) a.mean += x;
  a.mean /= n;
  double ss = 0.0;
  for (double x : xs) ss += (x - a.mean) * (x - a.mean);
  a.se = n > 1 ? std::sqrt(ss / (n - 1) / n) : 0.0;
  return a;
}

}  // namespace coarse_oracle
