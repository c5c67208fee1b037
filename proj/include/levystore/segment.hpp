#pragma once

#include <optional>
#include <vector>

#include "levystore/process_spec.hpp"

namespace levystore {

struct SegmentEvent {
  double time_offset = 0.0;  // in [0, duration)
  double jump_size = 0.0;    // > 0
};

// Realization of one regime interval of the driving process. With
// brownian_var = 0 this is an exact piecewise-linear-plus-jumps skeleton;
// otherwise Gaussian increments are attached to the partition formed by the
// regular grid with the jump epochs inserted at their exact positions.
struct SegmentSample {
  double duration = 0.0;
  std::vector<SegmentEvent> events;         // strictly increasing offsets
  double continuous_increment_rate = 0.0;   // -drift_rate (up) or +drift (down)
  // partition cell ends (time offsets) and the Gaussian increment over each
  // cell; present only when brownian_var > 0
  struct BrownianGrid {
    std::vector<double> cell_end;
    std::vector<double> increment;
  };
  std::optional<BrownianGrid> brownian;

  double total_jump() const {
    double s = 0.0;
    for (const auto& e : events) s += e.jump_size;
    return s;
  }
  double total_increment() const {
    double s = continuous_increment_rate * duration + total_jump();
    if (brownian)
      for (double db : brownian->increment) s += db;
    return s;
  }
};

// Poisson jump epochs at the spec's rate over [0, duration), i.i.d. sizes
// from the jump law, linear drift at the regime's rate. grid_step is used
// only when brownian_var > 0.
SegmentSample sample_segment(const UpProcessSpec& spec, double duration,
                             RngStream& rng, double grid_step = 1e-3);
SegmentSample sample_segment(const DownProcessSpec& spec, double duration,
                             RngStream& rng);

}  // namespace levystore
