#pragma once

#include <utility>
#include <variant>
#include <vector>

#include "levystore/jump_distribution.hpp"

namespace levystore {

// Alternating i.i.d. down/up period durations, drawn from the same
// parametric family as the jump laws.
struct RenewalAlternation {
  JumpDistribution down_duration;
  JumpDistribution up_duration;
  bool operator==(const RenewalAlternation&) const = default;
};

// Down periods of i.i.d. duration; each up period lasts until the workload
// first hits zero (no reflection ever occurs). If the workload is zero when
// an up period begins, the period runs until the first arrival has been
// cleared, so up periods have positive length.
struct ExhaustiveUp {
  JumpDistribution down_duration;
  bool operator==(const ExhaustiveUp&) const = default;
};

// Explicit (S_n, T_n) epochs with 0 <= S_1 <= T_1 <= S_2 <= ...; the down
// period k is [T_{k-1}, S_k). After the table is exhausted the path stays in
// an up period until the horizon.
struct ScheduleTable {
  std::vector<std::pair<double, double>> periods;
  bool operator==(const ScheduleTable&) const = default;

  void validate() const;
};

using RegimePolicy = std::variant<RenewalAlternation, ExhaustiveUp, ScheduleTable>;

const char* policy_name(const RegimePolicy& policy);

}  // namespace levystore
