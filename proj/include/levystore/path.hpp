#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <vector>

#include "levystore/process_spec.hpp"

namespace levystore {

// One maximal interval [t0, t1) on which the workload is linear:
// W(t) = w0 + slope * (t - t0). The regulator increases by reg_increment
// over the piece (only on up pieces pinned at zero, where it accrues
// linearly). A jump discontinuity is encoded by the next piece starting at
// this piece's end time with a larger w0.
struct PathPiece {
  double t0 = 0.0;
  double w0 = 0.0;
  double slope = 0.0;
  double reg_increment = 0.0;
  bool down = false;  // regime indicator J on the piece
};

// Completed down period k: [t_prev, s) with the embedded workloads recorded
// as left limits at the boundary epochs (the boundary belongs to the
// following regime).
struct CycleBoundary {
  double t_prev = 0.0;     // T_{k-1}
  double s = 0.0;          // S_k
  double w_at_t_prev = 0.0;
  double w_at_s = 0.0;
  std::size_t piece_begin = 0;  // pieces of the down period [t_prev, s)
  std::size_t piece_end = 0;
};

struct SkeletonPoint {
  double t = 0.0;
  double w = 0.0;
  double l = 0.0;
  int j = 0;
};

// Simulated path of (W, L, J) over [0, horizon]. Exact mode stores the
// polygonal skeleton at event resolution; grid mode stores one constant
// piece per grid cell (cadlag left-endpoint convention).
struct PathSample {
  std::vector<PathPiece> pieces;
  std::vector<CycleBoundary> cycles;
  // start of a down period that was still open at the horizon, if any
  std::optional<double> trailing_down_start;
  double horizon = 0.0;
  double w0 = 0.0;
  double w_end = 0.0;
  bool exact_mode = true;
  double grid_step = 0.0;
  // specs that produced the path; estimators that take specs check these
  UpProcessSpec up;
  DownProcessSpec down;

  double piece_end_time(std::size_t i) const {
    return i + 1 < pieces.size() ? pieces[i + 1].t0 : horizon;
  }
  double piece_end_value(std::size_t i) const {
    const auto& p = pieces[i];
    return p.w0 + p.slope * (piece_end_time(i) - p.t0);
  }

  // W(t) under the cadlag convention (a boundary epoch reads the value of
  // the following piece)
  double value_at(double t) const;

  double regulator_total() const;
  // L at a given time; t must not fall strictly inside a piece that
  // accumulates regulator (callers pass piece boundaries)
  double regulator_at(double t) const;
  double down_time_in(double from, double to) const;
  bool has_down_time() const { return down_time_in(0.0, horizon) > 0.0; }

  std::vector<SkeletonPoint> skeleton() const;
  void write_csv(std::ostream& os) const;
  void write_boundaries_csv(std::ostream& os) const;
};

// Fraction of [0, horizon] spent in down periods, computed exactly from the
// boundary epochs.
double occupancy_fraction(const PathSample& path);

}  // namespace levystore
