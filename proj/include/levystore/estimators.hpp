#pragma once

#include <iosfwd>
#include <span>
#include <vector>

#include "levystore/path.hpp"
#include "levystore/process_spec.hpp"

namespace levystore {

struct EstimatorOptions {
  // fraction of the horizon discarded before time-indexed estimators; the
  // cut is snapped to the next piece boundary
  double burn_in_fraction = 0.1;
  // non-overlapping batch count for time-average standard errors
  int num_batches = 20;
};

enum class LstBasis { time_average, down_conditional, embedded_S, embedded_T };

const char* basis_name(LstBasis basis);

// Empirical Laplace-Stieltjes transform on an alpha grid with one standard
// error per point. Values lie in (0,1] and are nonincreasing in alpha up to
// sampling noise; the value at alpha = 0 is exactly 1 for the time-average
// and embedded bases.
struct LstEstimate {
  std::vector<double> alphas;
  std::vector<double> values;
  std::vector<double> std_errors;
  LstBasis basis = LstBasis::time_average;

  void write_csv(std::ostream& os) const;
};

struct ResidualStat {
  double alpha = 0.0;
  double value = 0.0;
  double horizon_or_n = 0.0;
  double std_error = 0.0;
};

// (1/t) \int e^{-alpha W(s)} ds over the post-burn-in window, integrated in
// closed form over each linear piece (exact mode) which reduces to the
// left-endpoint rectangle rule on grid pieces.
LstEstimate time_avg_lst(const PathSample& path, std::span<const double> alphas,
                         const EstimatorOptions& opts = {});

struct DownConditionalResult {
  LstEstimate lst;      // ratio estimator for E e^{-alpha W_d}
  double p_d_hat = 0.0; // down occupancy over the same window
};

// Ratio estimator \int e^{-alpha W} J ds / \int J ds with jackknife standard
// errors over down periods. Errors if the window contains no down time.
DownConditionalResult down_conditional_lst(const PathSample& path,
                                           std::span<const double> alphas,
                                           const EstimatorOptions& opts = {});

// Sample mean of e^{-alpha W(.)} over the embedded epochs W(S_k) (basis
// embedded_S) or W(T_{k-1}) (embedded_T); at least 5 completed periods.
LstEstimate embedded_lst(const PathSample& path, std::span<const double> alphas,
                         LstBasis basis, const EstimatorOptions& opts = {});

struct EmbeddedMoment {
  double mean = 0.0;
  double std_error = 0.0;
  std::size_t count = 0;
};

// Mean workload at the embedded epochs (same windowing as embedded_lst).
EmbeddedMoment embedded_mean_w(const PathSample& path, LstBasis basis,
                               const EstimatorOptions& opts = {});

// Normalized martingale statistic
//   R(t) = [ \int (phi(a)(1-J) - eta(a) J) e^{-aW} ds
//            + e^{-aW(0)} - e^{-aW(t)} - a L(t) ] / t
// over the post-burn-in window. The jump-correction sum vanishes because
// a*L is continuous and e^{-aW} = 1 wherever L grows. The standard error
// comes from batch values, which telescope to the full statistic.
ResidualStat martingale_residual(const PathSample& path, double alpha,
                                 const UpProcessSpec& up,
                                 const DownProcessSpec& down,
                                 const EstimatorOptions& opts = {});

// Per-down-period optional-stopping statistic
//   (1/n) sum_k e^{-aW(T_{k-1})} Delta_k,
//   Delta_k = -eta(a) \int_0^{X_k} e^{-a X_d^{(k)}(s)} ds + 1
//             - e^{-a X_d^{(k)}(X_k)},
// with the first 5 periods discarded. The summands are martingale
// differences, so the plain standard error of the mean applies.
ResidualStat delta_residual(const PathSample& path, double alpha,
                            const DownProcessSpec& down,
                            const EstimatorOptions& opts = {});

// Non-overlapping batch-means standard error of the series mean; the series
// length must divide evenly into at least 10 batches.
double batch_se(std::span<const double> series, int num_batches);

}  // namespace levystore
