#include "levystore/path.hpp"

#include <algorithm>
#include <ostream>

#include "levystore/csv.hpp"
#include "levystore/errors.hpp"

namespace levystore {

double PathSample::value_at(double t) const {
  if (pieces.empty() || t < pieces.front().t0) return w0;
  if (t >= horizon) return w_end;
  // last piece with t0 <= t
  std::size_t lo = 0, hi = pieces.size();
  while (hi - lo > 1) {
    const std::size_t mid = lo + (hi - lo) / 2;
    if (pieces[mid].t0 <= t)
      lo = mid;
    else
      hi = mid;
  }
  return pieces[lo].w0 + pieces[lo].slope * (t - pieces[lo].t0);
}

double PathSample::regulator_total() const {
  double total = 0.0;
  for (const auto& p : pieces) total += p.reg_increment;
  return total;
}

double PathSample::regulator_at(double t) const {
  double total = 0.0;
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    const double end = piece_end_time(i);
    if (end <= t) {
      total += pieces[i].reg_increment;
      continue;
    }
    if (pieces[i].t0 < t && pieces[i].reg_increment != 0.0) {
      // regulator accrues linearly within a pinned piece
      const double frac = (t - pieces[i].t0) / (end - pieces[i].t0);
      total += pieces[i].reg_increment * frac;
    }
    break;
  }
  return total;
}

double PathSample::down_time_in(double from, double to) const {
  double total = 0.0;
  for (const auto& c : cycles) {
    const double lo = std::max(c.t_prev, from);
    const double hi = std::min(c.s, to);
    if (hi > lo) total += hi - lo;
  }
  if (trailing_down_start) {
    const double lo = std::max(*trailing_down_start, from);
    const double hi = std::min(horizon, to);
    if (hi > lo) total += hi - lo;
  }
  return total;
}

std::vector<SkeletonPoint> PathSample::skeleton() const {
  std::vector<SkeletonPoint> pts;
  pts.reserve(pieces.size() + 1);
  double reg = 0.0;
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    pts.push_back({pieces[i].t0, pieces[i].w0, reg, pieces[i].down ? 1 : 0});
    reg += pieces[i].reg_increment;
  }
  if (!pieces.empty()) {
    pts.push_back({horizon, w_end, reg, pieces.back().down ? 1 : 0});
  } else {
    pts.push_back({0.0, w0, 0.0, 0});
  }
  return pts;
}

void PathSample::write_csv(std::ostream& os) const {
  os << "t,W,L,J\n";
  for (const auto& p : skeleton())
    os << csv_num(p.t) << ',' << csv_num(p.w) << ',' << csv_num(p.l) << ','
       << p.j << '\n';
}

void PathSample::write_boundaries_csv(std::ostream& os) const {
  os << "k,T_prev,S_k,W_at_T_prev,W_at_S_k\n";
  for (std::size_t k = 0; k < cycles.size(); ++k) {
    const auto& c = cycles[k];
    os << (k + 1) << ',' << csv_num(c.t_prev) << ',' << csv_num(c.s) << ','
       << csv_num(c.w_at_t_prev) << ',' << csv_num(c.w_at_s) << '\n';
  }
}

double occupancy_fraction(const PathSample& path) {
  if (!(path.horizon > 0.0))
    fail(ErrorCode::invalid_value, "path: horizon must be > 0");
  return path.down_time_in(0.0, path.horizon) / path.horizon;
}

}  // namespace levystore
