#include "levystore/segment.hpp"

#include <algorithm>
#include <cmath>

#include "levystore/errors.hpp"

namespace levystore {

namespace {

void sample_poisson_events(double rate, const JumpDistribution& dist,
                           double duration, RngStream& rng,
                           std::vector<SegmentEvent>& out) {
  if (rate <= 0.0 || duration <= 0.0) return;
  const double mean_gap = 1.0 / rate;
  double t = rng.exponential(mean_gap);
  while (t < duration) {
    out.push_back({t, dist.sample(rng)});
    t += rng.exponential(mean_gap);
  }
}

}  // namespace

SegmentSample sample_segment(const UpProcessSpec& spec, double duration,
                             RngStream& rng, double grid_step) {
  if (duration < 0.0)
    fail(ErrorCode::invalid_value, "duration: must be >= 0");
  SegmentSample seg;
  seg.duration = duration;
  seg.continuous_increment_rate = -spec.drift_rate;
  if (spec.jump_rate > 0.0)
    sample_poisson_events(spec.jump_rate, *spec.jump_dist, duration, rng,
                          seg.events);
  if (spec.brownian_var > 0.0 && duration > 0.0) {
    if (!(grid_step > 0.0))
      fail(ErrorCode::invalid_value, "grid_step: must be > 0");
    SegmentSample::BrownianGrid grid;
    // partition: regular grid with jump epochs inserted at exact positions
    std::size_t next_event = 0;
    double t = 0.0;
    while (t < duration) {
      double cell_end = std::min(t + grid_step, duration);
      if (next_event < seg.events.size() &&
          seg.events[next_event].time_offset < cell_end) {
        cell_end = seg.events[next_event].time_offset;
        ++next_event;
      }
      if (cell_end > t) {
        grid.cell_end.push_back(cell_end);
        grid.increment.push_back(
            std::sqrt(spec.brownian_var * (cell_end - t)) * rng.normal());
      }
      t = cell_end;
    }
    seg.brownian = std::move(grid);
  }
  return seg;
}

SegmentSample sample_segment(const DownProcessSpec& spec, double duration,
                             RngStream& rng) {
  if (duration < 0.0)
    fail(ErrorCode::invalid_value, "duration: must be >= 0");
  SegmentSample seg;
  seg.duration = duration;
  seg.continuous_increment_rate = spec.drift;
  if (spec.jump_rate > 0.0)
    sample_poisson_events(spec.jump_rate, *spec.jump_dist, duration, rng,
                          seg.events);
  return seg;
}

}  // namespace levystore
