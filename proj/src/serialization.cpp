#include "levystore/serialization.hpp"

#include <set>

#include "levystore/errors.hpp"

namespace levystore {

namespace {

using nlohmann::json;

// Strict object reader: every access is recorded and finish() rejects any
// field that was never requested, naming its full path.
class ObjectReader {
 public:
  ObjectReader(const json& j, std::string path)
      : j_(j), path_(std::move(path)) {
    if (!j.is_object())
      fail(ErrorCode::invalid_type, path_ + ": must be a JSON object");
  }

  const json* find(const std::string& name) {
    seen_.insert(name);
    auto it = j_.find(name);
    return it == j_.end() ? nullptr : &*it;
  }

  const json& require(const std::string& name) {
    const json* p = find(name);
    if (!p)
      fail(ErrorCode::missing_field, member(name) + ": required field missing");
    return *p;
  }

  double number(const std::string& name) {
    return as_number(require(name), member(name));
  }

  double number_or(const std::string& name, double fallback) {
    const json* p = find(name);
    return p ? as_number(*p, member(name)) : fallback;
  }

  long long integer(const std::string& name) {
    const json& v = require(name);
    if (!v.is_number_integer())
      fail(ErrorCode::invalid_type, member(name) + ": must be an integer");
    return v.get<long long>();
  }

  long long integer_or(const std::string& name, long long fallback) {
    const json* p = find(name);
    if (!p) return fallback;
    if (!p->is_number_integer())
      fail(ErrorCode::invalid_type, member(name) + ": must be an integer");
    return p->get<long long>();
  }

  std::string text(const std::string& name) {
    const json& v = require(name);
    if (!v.is_string())
      fail(ErrorCode::invalid_type, member(name) + ": must be a string");
    return v.get<std::string>();
  }

  std::string text_or(const std::string& name, std::string fallback) {
    const json* p = find(name);
    if (!p) return fallback;
    if (!p->is_string())
      fail(ErrorCode::invalid_type, member(name) + ": must be a string");
    return p->get<std::string>();
  }

  bool boolean_or(const std::string& name, bool fallback) {
    const json* p = find(name);
    if (!p) return fallback;
    if (!p->is_boolean())
      fail(ErrorCode::invalid_type, member(name) + ": must be a boolean");
    return p->get<bool>();
  }

  std::string member(const std::string& name) const {
    return path_.empty() ? name : path_ + "." + name;
  }

  void finish() {
    for (auto it = j_.begin(); it != j_.end(); ++it)
      if (!seen_.contains(it.key()))
        fail(ErrorCode::unknown_field, member(it.key()) + ": unknown field");
  }

  static double as_number(const json& v, const std::string& where) {
    if (!v.is_number())
      fail(ErrorCode::invalid_type, where + ": must be a number");
    return v.get<double>();
  }

 private:
  const json& j_;
  std::string path_;
  std::set<std::string> seen_;
};

}  // namespace

nlohmann::json to_json(const JumpDistribution& dist) {
  json j;
  j["family"] = family_name(dist.family());
  switch (dist.family()) {
    case JumpDistribution::Family::exponential:
      j["mean"] = dist.param_a();
      break;
    case JumpDistribution::Family::deterministic:
      j["value"] = dist.param_a();
      break;
    case JumpDistribution::Family::erlang:
      j["shape"] = dist.shape();
      j["mean"] = dist.param_a();
      break;
    case JumpDistribution::Family::uniform:
      j["lo"] = dist.param_a();
      j["hi"] = dist.param_b();
      break;
  }
  return j;
}

JumpDistribution jump_distribution_from_json(const nlohmann::json& j,
                                             const std::string& path) {
  ObjectReader r(j, path);
  const std::string family = r.text("family");
  try {
    if (family == "exponential") {
      const double mean = r.number("mean");
      r.finish();
      return JumpDistribution::exponential(mean);
    }
    if (family == "deterministic") {
      const double value = r.number("value");
      r.finish();
      return JumpDistribution::deterministic(value);
    }
    if (family == "erlang") {
      const long long shape = r.integer("shape");
      const double mean = r.number("mean");
      r.finish();
      return JumpDistribution::erlang(static_cast<int>(shape), mean);
    }
    if (family == "uniform") {
      const double lo = r.number("lo");
      const double hi = r.number("hi");
      r.finish();
      return JumpDistribution::uniform(lo, hi);
    }
  } catch (const Error& e) {
    // factory messages are rooted at "jump_dist."; re-root at this path
    std::string msg = e.what();
    const std::string pfx = "jump_dist.";
    if (e.code() == ErrorCode::invalid_value && msg.rfind(pfx, 0) == 0)
      fail(ErrorCode::invalid_value, path + "." + msg.substr(pfx.size()));
    throw;
  }
  fail(ErrorCode::invalid_value,
       r.member("family") + ": must be one of exponential, deterministic, "
                            "erlang, uniform");
}

nlohmann::json to_json(const UpProcessSpec& spec) {
  json j;
  j["drift"] = spec.drift_rate;
  j["brownian_var"] = spec.brownian_var;
  j["jump_rate"] = spec.jump_rate;
  if (spec.jump_dist) j["jump_dist"] = to_json(*spec.jump_dist);
  return j;
}

UpProcessSpec up_spec_from_json(const nlohmann::json& j,
                                const std::string& path) {
  ObjectReader r(j, path);
  UpProcessSpec spec;
  spec.drift_rate = r.number("drift");
  spec.brownian_var = r.number_or("brownian_var", 0.0);
  spec.jump_rate = r.number("jump_rate");
  if (spec.jump_rate < 0.0)
    fail(ErrorCode::invalid_value, r.member("jump_rate") + ": must be >= 0");
  if (const json* jd = r.find("jump_dist"))
    spec.jump_dist = jump_distribution_from_json(*jd, r.member("jump_dist"));
  r.finish();
  if (spec.brownian_var < 0.0)
    fail(ErrorCode::invalid_value,
         r.member("brownian_var") + ": must be >= 0");
  if (spec.jump_rate > 0.0 && !spec.jump_dist)
    fail(ErrorCode::missing_field,
         r.member("jump_dist") + ": required when jump_rate > 0");
  if (!(spec.drift_rate > 0.0) && !(spec.brownian_var > 0.0))
    fail(ErrorCode::invalid_value,
         path + ": drift > 0 or brownian_var > 0 required (the up process "
                "must not be a subordinator)");
  return spec;
}

nlohmann::json to_json(const DownProcessSpec& spec) {
  json j;
  j["drift"] = spec.drift;
  j["jump_rate"] = spec.jump_rate;
  if (spec.jump_dist) j["jump_dist"] = to_json(*spec.jump_dist);
  return j;
}

DownProcessSpec down_spec_from_json(const nlohmann::json& j,
                                    const std::string& path) {
  ObjectReader r(j, path);
  DownProcessSpec spec;
  spec.drift = r.number("drift");
  spec.jump_rate = r.number("jump_rate");
  if (spec.drift < 0.0)
    fail(ErrorCode::invalid_value, r.member("drift") + ": must be >= 0");
  if (spec.jump_rate < 0.0)
    fail(ErrorCode::invalid_value, r.member("jump_rate") + ": must be >= 0");
  if (const json* jd = r.find("jump_dist"))
    spec.jump_dist = jump_distribution_from_json(*jd, r.member("jump_dist"));
  r.finish();
  if (spec.jump_rate > 0.0 && !spec.jump_dist)
    fail(ErrorCode::missing_field,
         r.member("jump_dist") + ": required when jump_rate > 0");
  return spec;
}

nlohmann::json to_json(const RegimePolicy& policy) {
  json j;
  j["type"] = policy_name(policy);
  if (const auto* renewal = std::get_if<RenewalAlternation>(&policy)) {
    j["down_duration"] = to_json(renewal->down_duration);
    j["up_duration"] = to_json(renewal->up_duration);
  } else if (const auto* exhaustive = std::get_if<ExhaustiveUp>(&policy)) {
    j["down_duration"] = to_json(exhaustive->down_duration);
  } else {
    const auto& table = std::get<ScheduleTable>(policy);
    json periods = json::array();
    for (const auto& [s, t] : table.periods) periods.push_back({s, t});
    j["periods"] = periods;
  }
  return j;
}

RegimePolicy policy_from_json(const nlohmann::json& j,
                              const std::string& path) {
  ObjectReader r(j, path);
  const std::string type = r.text("type");
  if (type == "renewal_alternation") {
    auto down = jump_distribution_from_json(r.require("down_duration"),
                                            r.member("down_duration"));
    auto up = jump_distribution_from_json(r.require("up_duration"),
                                          r.member("up_duration"));
    r.finish();
    return RenewalAlternation{down, up};
  }
  if (type == "exhaustive_up") {
    auto down = jump_distribution_from_json(r.require("down_duration"),
                                            r.member("down_duration"));
    r.finish();
    return ExhaustiveUp{down};
  }
  if (type == "schedule_table") {
    const json& periods = r.require("periods");
    if (!periods.is_array())
      fail(ErrorCode::invalid_type,
           r.member("periods") + ": must be an array of [S, T] pairs");
    ScheduleTable table;
    for (std::size_t n = 0; n < periods.size(); ++n) {
      const json& pair = periods[n];
      const std::string where =
          r.member("periods") + "[" + std::to_string(n) + "]";
      if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number() ||
          !pair[1].is_number())
        fail(ErrorCode::invalid_type, where + ": must be a [S, T] pair");
      table.periods.emplace_back(pair[0].get<double>(), pair[1].get<double>());
    }
    r.finish();
    table.validate();
    return table;
  }
  fail(ErrorCode::invalid_value,
       r.member("type") + ": must be one of renewal_alternation, "
                          "exhaustive_up, schedule_table");
}

nlohmann::json to_json(const Scenario& scenario) {
  json j;
  j["up"] = to_json(scenario.up);
  j["down"] = to_json(scenario.down);
  j["policy"] = to_json(scenario.policy);
  j["w0"] = scenario.w0;
  j["horizon"] = scenario.horizon;
  j["seed"] = scenario.seed;
  j["grid_step"] = scenario.grid_step;
  j["mode"] = scenario.mode == SimMode::automatic
                  ? "auto"
                  : (scenario.mode == SimMode::exact ? "exact" : "grid");
  return j;
}

Scenario scenario_from_json(const nlohmann::json& j, const std::string& path) {
  ObjectReader r(j, path);
  Scenario sc;
  sc.up = up_spec_from_json(r.require("up"), r.member("up"));
  if (const json* down = r.find("down"))
    sc.down = down_spec_from_json(*down, r.member("down"));
  sc.policy = policy_from_json(r.require("policy"), r.member("policy"));
  sc.w0 = r.number_or("w0", 0.0);
  sc.horizon = r.number("horizon");
  const long long seed = r.integer_or("seed", 0);
  if (seed < 0)
    fail(ErrorCode::invalid_value, r.member("seed") + ": must be >= 0");
  sc.seed = static_cast<std::uint64_t>(seed);
  sc.grid_step = r.number_or("grid_step", 1e-3);
  const std::string mode = r.text_or("mode", "auto");
  if (mode == "auto")
    sc.mode = SimMode::automatic;
  else if (mode == "exact")
    sc.mode = SimMode::exact;
  else if (mode == "grid")
    sc.mode = SimMode::grid;
  else
    fail(ErrorCode::invalid_value,
         r.member("mode") + ": must be one of auto, exact, grid");
  r.finish();
  try {
    sc.validate();
  } catch (const Error& e) {
    // scenario invariants surface with this object's path prefix
    const std::string msg = e.what();
    const std::string prefix = "scenario.";
    if (msg.rfind(prefix, 0) == 0 && path != "scenario")
      fail(e.code(), path.empty() ? msg.substr(prefix.size())
                                  : path + "." + msg.substr(prefix.size()));
    throw;
  }
  return sc;
}

}  // namespace levystore
