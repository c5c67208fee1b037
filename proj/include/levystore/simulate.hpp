#pragma once

#include <cstdint>

#include "levystore/errors.hpp"
#include "levystore/path.hpp"
#include "levystore/policy.hpp"
#include "levystore/process_spec.hpp"
#include "levystore/segment.hpp"

namespace levystore {

enum class SimMode { automatic, exact, grid };

struct Scenario {
  UpProcessSpec up;
  DownProcessSpec down;
  RegimePolicy policy = ScheduleTable{};
  double w0 = 0.0;
  double horizon = 0.0;
  std::uint64_t seed = 0;
  double grid_step = 1e-3;       // used only in grid mode
  SimMode mode = SimMode::automatic;

  // Validates components and cross-invariants; enforced by the config layer
  // before any simulation. horizon == 0 is allowed here (simulate returns an
  // empty skeleton), the harness additionally requires horizon > 0.
  void validate() const;

  bool uses_grid() const {
    return mode == SimMode::grid ||
           (mode == SimMode::automatic && up.brownian_var > 0.0);
  }

  Scenario with_seed(std::uint64_t s) const {
    Scenario copy = *this;
    copy.seed = s;
    return copy;
  }

  bool operator==(const Scenario&) const = default;
};

// Alternates down segments (subordinator, no reflection needed) and up
// segments (reflected netput). Exact event-driven mode resolves zero
// crossings analytically; grid mode applies the discrete reflection per grid
// cell with jump epochs inserted at their exact positions. Deterministic
// given the scenario (including seed).
PathSample simulate(const Scenario& scenario);

// First time the workload started at w > 0 and driven by the up netput hits
// zero, resolved exactly between jump epochs (requires brownian_var == 0 and
// a stable spec). max_events caps the loop defensively.
double first_passage_empty(const UpProcessSpec& spec, double w, RngStream& rng,
                           long max_events = 1'000'000'000L);

// Core of first_passage_empty, parameterized over the randomness so tests
// can drive it with scripted gaps and sizes.
template <class GapFn, class SizeFn>
double first_passage_core(double w, double drift_rate, GapFn&& next_gap,
                          SizeFn&& next_size, long max_events) {
  double t = 0.0;
  for (long n = 0; n < max_events; ++n) {
    const double gap = next_gap();
    const double hit = w / drift_rate;
    if (hit <= gap) return t + hit;
    t += gap;
    w -= drift_rate * gap;
    w += next_size();
  }
  throw Error(ErrorCode::numeric_failure,
              "first_passage_empty: event cap exceeded before hitting zero");
}

}  // namespace levystore
