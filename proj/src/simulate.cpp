#include "levystore/simulate.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "levystore/reflect.hpp"

namespace levystore {

void ScheduleTable::validate() const {
  double prev_t = 0.0;
  bool first = true;
  for (std::size_t n = 0; n < periods.size(); ++n) {
    const auto [s, t] = periods[n];
    const std::string where = "policy.periods[" + std::to_string(n) + "]";
    if (!std::isfinite(s) || !std::isfinite(t))
      fail(ErrorCode::invalid_value, where + ": epochs must be finite");
    if (s < prev_t)
      fail(ErrorCode::invalid_value,
           where + ": S_k must be >= previous T_{k-1}");
    if (t < s)
      fail(ErrorCode::invalid_value, where + ": T_k must be >= S_k");
    if (!first && t <= prev_t)
      fail(ErrorCode::invalid_value, where + ": T_k must exceed T_{k-1}");
    if (first && t <= 0.0)
      fail(ErrorCode::invalid_value, where + ": T_1 must be > 0");
    prev_t = t;
    first = false;
  }
}

const char* policy_name(const RegimePolicy& policy) {
  if (std::holds_alternative<RenewalAlternation>(policy))
    return "renewal_alternation";
  if (std::holds_alternative<ExhaustiveUp>(policy)) return "exhaustive_up";
  return "schedule_table";
}

void Scenario::validate() const {
  up.validate();
  down.validate();
  if (w0 < 0.0) fail(ErrorCode::invalid_value, "scenario.w0: must be >= 0");
  if (!(horizon >= 0.0) || !std::isfinite(horizon))
    fail(ErrorCode::invalid_value, "scenario.horizon: must be finite and >= 0");
  if (!(grid_step > 0.0))
    fail(ErrorCode::invalid_value, "scenario.grid_step: must be > 0");
  if (up.brownian_var > 0.0 && mode == SimMode::exact)
    fail(ErrorCode::invalid_value,
         "scenario.mode: exact mode requires brownian_var == 0");
  if (const auto* table = std::get_if<ScheduleTable>(&policy))
    table->validate();
  if (std::holds_alternative<ExhaustiveUp>(policy)) {
    if (uses_grid())
      fail(ErrorCode::invalid_value,
           "scenario.policy: exhaustive_up requires exact mode "
           "(brownian_var == 0)");
    if (!up.stable()) {
      const double bound =
          up.phi_prime0() / (down.eta_prime0() + up.phi_prime0());
      fail(ErrorCode::stability_violation,
           "scenario.policy: exhaustive_up requires a stable up process "
           "(phi'(0) = " +
               std::to_string(up.phi_prime0()) +
               " <= 0), so up periods need not terminate and the occupancy "
               "bound phi'(0)/(eta'(0)+phi'(0)) = " +
               std::to_string(bound) + " cannot hold");
    }
    if (!(up.jump_rate > 0.0))
      fail(ErrorCode::invalid_value,
           "scenario.policy: exhaustive_up requires up.jump_rate > 0 (an "
           "empty system would otherwise never see another arrival)");
  }
}

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Appends the exact piecewise-linear pieces of one down segment starting at
// absolute time t0 with workload w; returns the workload at the end.
double append_down_segment(const SegmentSample& seg, double t0, double w,
                           std::vector<PathPiece>& pieces) {
  double t_prev = 0.0;
  for (const auto& ev : seg.events) {
    if (ev.time_offset > t_prev) {
      pieces.push_back(
          {t0 + t_prev, w, seg.continuous_increment_rate, 0.0, true});
      w += seg.continuous_increment_rate * (ev.time_offset - t_prev);
      t_prev = ev.time_offset;
    }
    w += ev.jump_size;
  }
  if (seg.duration > t_prev) {
    pieces.push_back(
        {t0 + t_prev, w, seg.continuous_increment_rate, 0.0, true});
    w += seg.continuous_increment_rate * (seg.duration - t_prev);
  }
  return w;
}

std::vector<NetputStep> to_netput_steps(const SegmentSample& seg) {
  std::vector<NetputStep> steps;
  steps.reserve(seg.events.size() + 1);
  double t_prev = 0.0;
  for (const auto& ev : seg.events) {
    steps.push_back({ev.time_offset - t_prev, seg.continuous_increment_rate,
                     ev.jump_size});
    t_prev = ev.time_offset;
  }
  if (seg.duration > t_prev)
    steps.push_back({seg.duration - t_prev, seg.continuous_increment_rate, 0.0});
  return steps;
}

struct ExhaustiveSegment {
  std::vector<NetputStep> steps;
  double duration = 0.0;
  bool completed = false;  // workload reached zero within `remaining`
};

// Builds the netput steps of one exhaustive up period: if the workload is
// zero at the period start the descent clock arms at the first arrival.
// Stops at the exact zero-hitting time or at `remaining`, whichever is first.
ExhaustiveSegment build_exhaustive_segment(const UpProcessSpec& spec, double w,
                                           double remaining, RngStream& rng,
                                           long max_events) {
  ExhaustiveSegment seg;
  const double r = spec.drift_rate;
  const double mean_gap = 1.0 / spec.jump_rate;
  bool armed = w > 0.0;
  double elapsed = 0.0;
  for (long n = 0; n < max_events; ++n) {
    const double gap = rng.exponential(mean_gap);
    if (armed) {
      const double hit = w / r;
      if (hit <= gap) {
        if (elapsed + hit < remaining) {
          seg.steps.push_back({hit, -r, 0.0});
          seg.duration = elapsed + hit;
          seg.completed = true;
        } else {
          seg.steps.push_back({remaining - elapsed, -r, 0.0});
          seg.duration = remaining;
        }
        return seg;
      }
    }
    if (elapsed + gap >= remaining) {
      // truncated by the horizon before the next arrival
      seg.steps.push_back({remaining - elapsed, -r, 0.0});
      seg.duration = remaining;
      return seg;
    }
    const double size = spec.jump_dist->sample(rng);
    seg.steps.push_back({gap, -r, size});
    elapsed += gap;
    w = std::max(w - r * gap, 0.0) + size;
    armed = true;
  }
  fail(ErrorCode::numeric_failure,
       "exhaustive up period: event cap exceeded before emptying");
}

// Grid-mode rendering of one up segment: discrete reflection per partition
// cell (regular grid with jump epochs inserted exactly), cadlag constant
// pieces at the left endpoints.
double append_up_segment_grid(const SegmentSample& seg, double t0, double w,
                              double grid_step,
                              std::vector<PathPiece>& pieces) {
  std::size_t next_event = 0;
  std::size_t next_brownian = 0;
  double t = 0.0;
  while (t < seg.duration) {
    double cell_end = std::min(t + grid_step, seg.duration);
    double jump = 0.0;
    if (next_event < seg.events.size() &&
        seg.events[next_event].time_offset <= cell_end) {
      cell_end = seg.events[next_event].time_offset;
      jump = seg.events[next_event].jump_size;
      ++next_event;
    }
    double db = 0.0;
    if (seg.brownian && next_brownian < seg.brownian->cell_end.size() &&
        seg.brownian->cell_end[next_brownian] <= cell_end + 1e-15) {
      db = seg.brownian->increment[next_brownian];
      ++next_brownian;
    }
    const double dx = seg.continuous_increment_rate * (cell_end - t) + db + jump;
    const double unreflected = w + dx;
    const double w_next = unreflected > 0.0 ? unreflected : 0.0;
    const double reg = unreflected < 0.0 ? -unreflected : 0.0;
    if (cell_end > t) {
      pieces.push_back({t0 + t, w, 0.0, reg, false});
    } else if (reg > 0.0 && !pieces.empty()) {
      pieces.back().reg_increment += reg;
    }
    w = w_next;
    t = cell_end;
  }
  return w;
}

class PeriodSource {
 public:
  PeriodSource(const Scenario& sc, RngStream durations)
      : scenario_(sc), durations_(std::move(durations)) {}

  // duration of down period k (k counts from 1)
  double next_down(double t_now) {
    if (const auto* renewal = std::get_if<RenewalAlternation>(&scenario_.policy))
      return renewal->down_duration.sample(durations_);
    if (const auto* exhaustive = std::get_if<ExhaustiveUp>(&scenario_.policy))
      return exhaustive->down_duration.sample(durations_);
    const auto& table = std::get<ScheduleTable>(scenario_.policy).periods;
    if (index_ >= table.size()) return kInf;  // trailing up period
    const double s = table[index_].first;
    check_finite(s - t_now, "down");
    return s - t_now;
  }

  // duration of up period k; negative means "until first emptying"
  double next_up(double t_now) {
    if (const auto* renewal = std::get_if<RenewalAlternation>(&scenario_.policy))
      return renewal->up_duration.sample(durations_);
    if (std::holds_alternative<ExhaustiveUp>(scenario_.policy)) return -1.0;
    const auto& table = std::get<ScheduleTable>(scenario_.policy).periods;
    if (index_ >= table.size()) return kInf;
    const double t_end = table[index_].second;
    ++index_;
    check_finite(t_end - t_now, "up");
    return t_end - t_now;
  }

 private:
  static void check_finite(double d, const char* kind) {
    if (!std::isfinite(d) || d < 0.0)
      fail(ErrorCode::numeric_failure,
           std::string("policy generated an invalid ") + kind +
               " period duration");
  }

  const Scenario& scenario_;
  RngStream durations_;
  std::size_t index_ = 0;  // schedule-table cursor
};

}  // namespace

PathSample simulate(const Scenario& scenario) {
  scenario.validate();
  PathSample path;
  path.horizon = scenario.horizon;
  path.w0 = scenario.w0;
  path.w_end = scenario.w0;
  path.exact_mode = !scenario.uses_grid();
  path.grid_step = scenario.uses_grid() ? scenario.grid_step : 0.0;
  path.up = scenario.up;
  path.down = scenario.down;
  if (scenario.horizon <= 0.0) return path;

  PeriodSource periods(
      scenario,
      RngStream::substream(scenario.seed, {stream_role::durations}));
  double t = 0.0;
  double w = scenario.w0;
  std::uint64_t k = 1;

  while (t < scenario.horizon) {
    // ---- down period [T_{k-1}, S_k) ----
    const double want_down = periods.next_down(t);
    if (want_down == kInf) {
      // schedule exhausted: one trailing up period to the horizon
      auto stream =
          RngStream::substream(scenario.seed, {stream_role::up_segment, k});
      const SegmentSample seg = sample_segment(
          scenario.up, scenario.horizon - t, stream, scenario.grid_step);
      if (path.exact_mode)
        w = reflect_netput(w, t, to_netput_steps(seg), false, path.pieces);
      else
        w = append_up_segment_grid(seg, t, w, scenario.grid_step, path.pieces);
      break;
    }
    const double w_at_t_prev = w;
    const double t_prev = t;
    const bool down_truncated = t + want_down > scenario.horizon;
    const double down_dur =
        down_truncated ? scenario.horizon - t : want_down;
    const std::size_t piece_begin = path.pieces.size();
    if (down_dur > 0.0) {
      auto stream = RngStream::substream(scenario.seed,
                                         {stream_role::down_segment, k});
      const SegmentSample seg =
          sample_segment(scenario.down, down_dur, stream);
      w = append_down_segment(seg, t, w, path.pieces);
      t += down_dur;
    }
    if (down_truncated) {
      if (want_down > 0.0) path.trailing_down_start = t_prev;
      break;
    }
    path.cycles.push_back({t_prev, t, w_at_t_prev, w, piece_begin,
                           path.pieces.size()});

    // ---- up period [S_k, T_k) ----
    const double remaining = scenario.horizon - t;
    if (remaining <= 0.0) break;
    auto stream =
        RngStream::substream(scenario.seed, {stream_role::up_segment, k});
    const double want_up = periods.next_up(t);
    if (want_up < 0.0) {
      // exhaustive: run to the exact first emptying
      ExhaustiveSegment ex = build_exhaustive_segment(
          scenario.up, w, remaining, stream, 1'000'000'000L);
      w = reflect_netput(w, t, ex.steps, false, path.pieces);
      t += ex.duration;
    } else {
      const double up_dur = std::min(want_up, remaining);
      if (up_dur > 0.0) {
        const SegmentSample seg =
            sample_segment(scenario.up, up_dur, stream, scenario.grid_step);
        if (path.exact_mode) {
          w = reflect_netput(w, t, to_netput_steps(seg), false, path.pieces);
        } else {
          w = append_up_segment_grid(seg, t, w, scenario.grid_step,
                                     path.pieces);
        }
        t += up_dur;
      }
    }
    ++k;
  }
  path.w_end = w;
  return path;
}

double first_passage_empty(const UpProcessSpec& spec, double w, RngStream& rng,
                           long max_events) {
  spec.validate();
  if (!(w > 0.0)) fail(ErrorCode::invalid_value, "w: must be > 0");
  if (spec.brownian_var > 0.0)
    fail(ErrorCode::invalid_value,
         "first_passage_empty: requires brownian_var == 0 (exact mode)");
  if (!spec.stable())
    fail(ErrorCode::stability_violation,
         "first_passage_empty: up spec must be stable (phi'(0) > 0)");
  if (spec.jump_rate <= 0.0) return w / spec.drift_rate;
  const double mean_gap = 1.0 / spec.jump_rate;
  return first_passage_core(
      w, spec.drift_rate, [&] { return rng.exponential(mean_gap); },
      [&] { return spec.jump_dist->sample(rng); }, max_events);
}

}  // namespace levystore
