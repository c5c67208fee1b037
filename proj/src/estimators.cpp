#include "levystore/estimators.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>

#include "levystore/csv.hpp"
#include "levystore/errors.hpp"

namespace levystore {

namespace {

// \int_a^b e^{-alpha W(s)} ds for W(s) = w_a + m (s - a), organized so no
// intermediate exceeds e^{-alpha * min(W)} and small exponents go through
// expm1. `shift` subtracts a baseline from W (used by the down-period
// statistic, where W - W(T_{k-1}) >= 0 is the quantity of interest).
double exp_integral(double w_a, double slope, double len, double alpha,
                    double shift = 0.0) {
  if (len <= 0.0) return 0.0;
  if (alpha == 0.0) return len;
  const double w0 = w_a - shift;
  const double x = alpha * slope * len;
  if (x == 0.0) return len * std::exp(-alpha * w0);
  if (std::abs(x) <= 30.0)
    return std::exp(-alpha * w0) * (-std::expm1(-x)) / (alpha * slope);
  const double w1 = w0 + slope * len;
  return (std::exp(-alpha * w0) - std::exp(-alpha * w1)) / (alpha * slope);
}

struct Window {
  std::size_t first_piece = 0;
  double t_start = 0.0;
  double length = 0.0;
};

Window burn_in_window(const PathSample& path, const EstimatorOptions& opts) {
  if (path.pieces.empty())
    fail(ErrorCode::insufficient_data, "path: empty skeleton");
  if (opts.burn_in_fraction < 0.0 || opts.burn_in_fraction > 0.5)
    fail(ErrorCode::invalid_value, "burn_in_fraction: must be in [0, 0.5]");
  const double cut = opts.burn_in_fraction * path.horizon;
  Window w;
  while (w.first_piece < path.pieces.size() &&
         path.pieces[w.first_piece].t0 < cut)
    ++w.first_piece;
  w.t_start = w.first_piece < path.pieces.size()
                  ? path.pieces[w.first_piece].t0
                  : path.horizon;
  w.length = path.horizon - w.t_start;
  if (!(w.length > 0.0))
    fail(ErrorCode::insufficient_data,
         "path: no data left after burn-in window");
  return w;
}

enum class RegimeFilter { all, down_only, up_only };

bool piece_selected(const PathPiece& p, RegimeFilter f) {
  switch (f) {
    case RegimeFilter::all: return true;
    case RegimeFilter::down_only: return p.down;
    case RegimeFilter::up_only: return !p.down;
  }
  return true;
}

// integral of e^{-alpha W} over the window restricted to a regime, plus the
// per-batch split over equal time batches
struct BatchedIntegral {
  double total = 0.0;
  double selected_time = 0.0;
  std::vector<double> batch_integral;
  std::vector<double> batch_time;
};

BatchedIntegral integrate_window(const PathSample& path, const Window& win,
                                 double alpha, RegimeFilter filter,
                                 int num_batches) {
  BatchedIntegral out;
  out.batch_integral.assign(num_batches, 0.0);
  out.batch_time.assign(num_batches, 0.0);
  const double batch_len = win.length / num_batches;
  for (std::size_t i = win.first_piece; i < path.pieces.size(); ++i) {
    const auto& p = path.pieces[i];
    if (!piece_selected(p, filter)) continue;
    double a = std::max(p.t0, win.t_start);
    const double piece_end = path.piece_end_time(i);
    while (a < piece_end) {
      int b = std::min(num_batches - 1,
                       static_cast<int>((a - win.t_start) / batch_len));
      const double batch_end = win.t_start + (b + 1) * batch_len;
      const double sub_end = std::min(piece_end, batch_end);
      if (sub_end <= a) break;
      const double w_a = p.w0 + p.slope * (a - p.t0);
      const double v = exp_integral(w_a, p.slope, sub_end - a, alpha);
      out.total += v;
      out.selected_time += sub_end - a;
      out.batch_integral[b] += v;
      out.batch_time[b] += sub_end - a;
      a = sub_end;
    }
  }
  return out;
}

double jackknife_se_of_mean(std::span<const double> xs) {
  const std::size_t n = xs.size();
  if (n < 2) return 0.0;
  double mean = 0.0;
  for (double x : xs) mean += x;
  mean /= static_cast<double>(n);
  double ss = 0.0;
  for (double x : xs) ss += (x - mean) * (x - mean);
  return std::sqrt(ss / static_cast<double>(n - 1) / static_cast<double>(n));
}

// delete-one jackknife for the ratio sum(a)/sum(b)
double jackknife_se_of_ratio(std::span<const double> a,
                             std::span<const double> b) {
  const std::size_t n = a.size();
  if (n < 2) return 0.0;
  double sa = 0.0, sb = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    sa += a[i];
    sb += b[i];
  }
  std::vector<double> leave(n);
  double mean = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double d = sb - b[i];
    leave[i] = d > 0.0 ? (sa - a[i]) / d : sa / sb;
    mean += leave[i];
  }
  mean /= static_cast<double>(n);
  double ss = 0.0;
  for (double v : leave) ss += (v - mean) * (v - mean);
  return std::sqrt(ss * static_cast<double>(n - 1) / static_cast<double>(n));
}

std::vector<double> embedded_values(const PathSample& path, LstBasis basis,
                                    const Window& win) {
  std::vector<double> vals;
  vals.reserve(path.cycles.size());
  for (const auto& c : path.cycles) {
    if (basis == LstBasis::embedded_T) {
      if (c.t_prev >= win.t_start) vals.push_back(c.w_at_t_prev);
    } else {
      if (c.s >= win.t_start) vals.push_back(c.w_at_s);
    }
  }
  return vals;
}

void check_alphas(std::span<const double> alphas) {
  for (double a : alphas)
    if (a < 0.0) fail(ErrorCode::invalid_value, "alphas: must be >= 0");
}

}  // namespace

const char* basis_name(LstBasis basis) {
  switch (basis) {
    case LstBasis::time_average: return "time-average";
    case LstBasis::down_conditional: return "down-conditional";
    case LstBasis::embedded_S: return "embedded-S";
    case LstBasis::embedded_T: return "embedded-T";
  }
  return "unknown";
}

void LstEstimate::write_csv(std::ostream& os) const {
  os << "alpha,value,std_error,basis\n";
  for (std::size_t i = 0; i < alphas.size(); ++i)
    os << csv_num(alphas[i]) << ',' << csv_num(values[i]) << ','
       << csv_num(std_errors[i]) << ',' << basis_name(basis) << '\n';
}

LstEstimate time_avg_lst(const PathSample& path, std::span<const double> alphas,
                         const EstimatorOptions& opts) {
  check_alphas(alphas);
  const Window win = burn_in_window(path, opts);
  LstEstimate est;
  est.basis = LstBasis::time_average;
  for (double alpha : alphas) {
    est.alphas.push_back(alpha);
    if (alpha == 0.0) {
      est.values.push_back(1.0);
      est.std_errors.push_back(0.0);
      continue;
    }
    const auto acc = integrate_window(path, win, alpha, RegimeFilter::all,
                                      opts.num_batches);
    est.values.push_back(acc.total / win.length);
    std::vector<double> means(acc.batch_integral.size());
    for (std::size_t b = 0; b < means.size(); ++b)
      means[b] = acc.batch_time[b] > 0.0
                     ? acc.batch_integral[b] / acc.batch_time[b]
                     : 0.0;
    est.std_errors.push_back(jackknife_se_of_mean(means));
  }
  return est;
}

DownConditionalResult down_conditional_lst(const PathSample& path,
                                           std::span<const double> alphas,
                                           const EstimatorOptions& opts) {
  check_alphas(alphas);
  const Window win = burn_in_window(path, opts);
  const double down_time = path.down_time_in(win.t_start, path.horizon);
  if (!(down_time > 0.0))
    fail(ErrorCode::insufficient_data,
         "down_conditional_lst: path has no down time in the window");

  DownConditionalResult out;
  out.p_d_hat = down_time / win.length;
  out.lst.basis = LstBasis::down_conditional;

  // per-down-period contributions for the jackknife
  struct PeriodSlice {
    std::size_t piece_begin, piece_end;
    double t_from, t_to;
  };
  std::vector<PeriodSlice> slices;
  for (const auto& c : path.cycles) {
    if (c.s <= win.t_start || c.s == c.t_prev) continue;
    slices.push_back({c.piece_begin, c.piece_end,
                      std::max(c.t_prev, win.t_start), c.s});
  }
  if (path.trailing_down_start) {
    // open down period at the horizon: its pieces are the trailing ones
    std::size_t begin = path.pieces.size();
    while (begin > 0 && path.pieces[begin - 1].down) --begin;
    slices.push_back({begin, path.pieces.size(),
                      std::max(*path.trailing_down_start, win.t_start),
                      path.horizon});
  }

  for (double alpha : alphas) {
    out.lst.alphas.push_back(alpha);
    if (alpha == 0.0) {
      out.lst.values.push_back(1.0);
      out.lst.std_errors.push_back(0.0);
      continue;
    }
    std::vector<double> num(slices.size()), den(slices.size());
    double total_num = 0.0, total_den = 0.0;
    for (std::size_t si = 0; si < slices.size(); ++si) {
      const auto& sl = slices[si];
      double acc = 0.0, time_acc = 0.0;
      for (std::size_t i = sl.piece_begin; i < sl.piece_end; ++i) {
        const auto& p = path.pieces[i];
        const double a = std::max(p.t0, sl.t_from);
        const double b = std::min(path.piece_end_time(i), sl.t_to);
        if (b <= a) continue;
        const double w_a = p.w0 + p.slope * (a - p.t0);
        acc += exp_integral(w_a, p.slope, b - a, alpha);
        time_acc += b - a;
      }
      num[si] = acc;
      den[si] = time_acc;
      total_num += acc;
      total_den += time_acc;
    }
    out.lst.values.push_back(total_num / total_den);
    out.lst.std_errors.push_back(jackknife_se_of_ratio(num, den));
  }
  return out;
}

LstEstimate embedded_lst(const PathSample& path, std::span<const double> alphas,
                         LstBasis basis, const EstimatorOptions& opts) {
  if (basis != LstBasis::embedded_S && basis != LstBasis::embedded_T)
    fail(ErrorCode::invalid_value, "basis: must be embedded_S or embedded_T");
  check_alphas(alphas);
  const Window win = burn_in_window(path, opts);
  const auto ws = embedded_values(path, basis, win);
  if (ws.size() < 5)
    fail(ErrorCode::insufficient_data,
         "embedded_lst: fewer than 5 completed periods in the window");
  LstEstimate est;
  est.basis = basis;
  std::vector<double> transformed(ws.size());
  for (double alpha : alphas) {
    est.alphas.push_back(alpha);
    if (alpha == 0.0) {
      est.values.push_back(1.0);
      est.std_errors.push_back(0.0);
      continue;
    }
    double mean = 0.0;
    for (std::size_t i = 0; i < ws.size(); ++i) {
      transformed[i] = std::exp(-alpha * ws[i]);
      mean += transformed[i];
    }
    est.values.push_back(mean / static_cast<double>(ws.size()));
    est.std_errors.push_back(jackknife_se_of_mean(transformed));
  }
  return est;
}

EmbeddedMoment embedded_mean_w(const PathSample& path, LstBasis basis,
                               const EstimatorOptions& opts) {
  if (basis != LstBasis::embedded_S && basis != LstBasis::embedded_T)
    fail(ErrorCode::invalid_value, "basis: must be embedded_S or embedded_T");
  const Window win = burn_in_window(path, opts);
  const auto ws = embedded_values(path, basis, win);
  if (ws.size() < 5)
    fail(ErrorCode::insufficient_data,
         "embedded_mean_w: fewer than 5 completed periods in the window");
  EmbeddedMoment m;
  m.count = ws.size();
  for (double w : ws) m.mean += w;
  m.mean /= static_cast<double>(ws.size());
  m.std_error = jackknife_se_of_mean(ws);
  return m;
}

ResidualStat martingale_residual(const PathSample& path, double alpha,
                                 const UpProcessSpec& up,
                                 const DownProcessSpec& down,
                                 const EstimatorOptions& opts) {
  if (!(alpha > 0.0)) fail(ErrorCode::invalid_value, "alpha: must be > 0");
  if (!(up == path.up) || !(down == path.down))
    fail(ErrorCode::invalid_value,
         "martingale_residual: specs do not match the path's scenario");
  const Window win = burn_in_window(path, opts);
  const double fee = up.phi(alpha);
  const double gee = down.eta(alpha);

  const int nb = opts.num_batches;
  const auto up_int =
      integrate_window(path, win, alpha, RegimeFilter::up_only, nb);
  const auto dn_int =
      integrate_window(path, win, alpha, RegimeFilter::down_only, nb);

  const double batch_len = win.length / nb;
  std::vector<double> batch_vals(nb);
  double prev_w = path.value_at(win.t_start);
  double prev_l = path.regulator_at(win.t_start);
  for (int b = 0; b < nb; ++b) {
    const double t_end =
        b + 1 == nb ? path.horizon : win.t_start + (b + 1) * batch_len;
    const double w_b = b + 1 == nb ? path.w_end : path.value_at(t_end);
    const double l_b = path.regulator_at(t_end);
    batch_vals[b] = (fee * up_int.batch_integral[b] -
                     gee * dn_int.batch_integral[b] +
                     std::exp(-alpha * prev_w) - std::exp(-alpha * w_b) -
                     alpha * (l_b - prev_l)) /
                    batch_len;
    prev_w = w_b;
    prev_l = l_b;
  }

  ResidualStat stat;
  stat.alpha = alpha;
  stat.horizon_or_n = win.length;
  double total = 0.0;
  for (double v : batch_vals) total += v;
  stat.value = total / nb;
  stat.std_error = jackknife_se_of_mean(batch_vals);
  return stat;
}

ResidualStat delta_residual(const PathSample& path, double alpha,
                            const DownProcessSpec& down,
                            const EstimatorOptions& opts) {
  if (!(alpha > 0.0)) fail(ErrorCode::invalid_value, "alpha: must be > 0");
  if (!(down == path.down))
    fail(ErrorCode::invalid_value,
         "delta_residual: down spec does not match the path's scenario");
  const double gee = down.eta(alpha);
  constexpr std::size_t kDiscard = 5;
  if (path.cycles.size() < kDiscard + 5)
    fail(ErrorCode::insufficient_data,
         "delta_residual: need at least 5 periods after the first 5");
  std::vector<double> terms;
  terms.reserve(path.cycles.size() - kDiscard);
  for (std::size_t k = kDiscard; k < path.cycles.size(); ++k) {
    const auto& c = path.cycles[k];
    // integral of e^{-alpha (W(s) - W(T_{k-1}))} over the down period
    double integral = 0.0;
    for (std::size_t i = c.piece_begin; i < c.piece_end; ++i) {
      const auto& p = path.pieces[i];
      const double len = path.piece_end_time(i) - p.t0;
      integral += exp_integral(p.w0, p.slope, len, alpha, c.w_at_t_prev);
    }
    const double growth = c.w_at_s - c.w_at_t_prev;
    const double delta = -gee * integral + 1.0 - std::exp(-alpha * growth);
    terms.push_back(std::exp(-alpha * c.w_at_t_prev) * delta);
  }
  ResidualStat stat;
  stat.alpha = alpha;
  stat.horizon_or_n = static_cast<double>(terms.size());
  double total = 0.0;
  for (double v : terms) total += v;
  stat.value = total / static_cast<double>(terms.size());
  stat.std_error = jackknife_se_of_mean(terms);
  return stat;
}

double batch_se(std::span<const double> series, int num_batches) {
  if (num_batches < 10)
    fail(ErrorCode::invalid_value, "num_batches: must be >= 10");
  if (series.empty() || series.size() % static_cast<std::size_t>(num_batches) != 0)
    fail(ErrorCode::invalid_value,
         "series: length must divide evenly into the batches");
  const std::size_t per = series.size() / num_batches;
  std::vector<double> means(num_batches, 0.0);
  for (int b = 0; b < num_batches; ++b) {
    for (std::size_t i = 0; i < per; ++i)
      means[b] += series[b * per + i];
    means[b] /= static_cast<double>(per);
  }
  return jackknife_se_of_mean(means);
}

}  // namespace levystore
