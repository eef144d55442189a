#include "uxagent/config.hpp"

#include <json.hpp>

#include "json_io.hpp"
#include "uxagent/error.hpp"

namespace uxagent {

DoorOrder DoorOrder::parse(std::string_view text) {
  if (text.empty() || text == "random") return {};
  if (text == "goal-first") return {Mode::GoalFirst, {}};
  if (text == "goal-last") return {Mode::GoalLast, {}};
  DoorOrder out{Mode::Explicit, {}};
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find(',', start);
    if (end == std::string_view::npos) end = text.size();
    auto id = text.substr(start, end - start);
    if (id.empty()) throw Error("empty button id in door order '" + std::string(text) + "'");
    out.buttons.emplace_back(id);
    start = end + 1;
  }
  return out;
}

std::string DoorOrder::to_string() const {
  switch (mode) {
    case Mode::Random: return "random";
    case Mode::GoalFirst: return "goal-first";
    case Mode::GoalLast: return "goal-last";
    case Mode::Explicit: break;
  }
  std::string out;
  for (const auto& id : buttons) out += (out.empty() ? "" : ",") + id;
  return out;
}

void RunConfig::check() const {
  if (!(tick_s > 0.0)) throw Error("tick_s must be positive");
  (void)engine().ticks_per_move();
  if (fov_radius < 1) throw Error("fov_radius must be at least 1");
  if (tick_limit <= 0) throw Error("tick_limit must be positive");
  appraisal.check();
}

void to_json(nlohmann::json& j, const RunConfig& c) {
  j = nlohmann::json{
      {"tick_s", c.tick_s},
      {"move_period_s", c.move_period_s},
      {"fov_radius", c.fov_radius},
      {"appraisal",
       {{"valence_gain", c.appraisal.valence_gain},
        {"arousal_gain", c.appraisal.arousal_gain},
        {"decay_amount", c.appraisal.decay_amount},
        {"decay_window_s", c.appraisal.decay_window_s},
        {"clamp_lo", c.appraisal.clamp_lo},
        {"clamp_hi", c.appraisal.clamp_hi}}},
      {"spawn_percepts_arouse", c.spawn_percepts_arouse},
      {"seed", c.seed},
      {"tick_limit", c.tick_limit},
  };
  if (c.door_order.mode == DoorOrder::Mode::Explicit) {
    j["door_order"] = c.door_order.buttons;
  } else {
    j["door_order"] = c.door_order.to_string();
  }
}

void from_json(const nlohmann::json& j, RunConfig& c) {
  if (!j.is_object()) throw Error("run config must be a JSON object");
  for (const auto& [key, value] : j.items()) {
    if (key == "tick_s") {
      c.tick_s = value.get<double>();
    } else if (key == "move_period_s") {
      c.move_period_s = value.get<double>();
    } else if (key == "fov_radius") {
      c.fov_radius = value.get<int>();
    } else if (key == "spawn_percepts_arouse") {
      c.spawn_percepts_arouse = value.get<bool>();
    } else if (key == "seed") {
      c.seed = value.get<std::uint64_t>();
    } else if (key == "tick_limit") {
      c.tick_limit = value.get<std::int64_t>();
    } else if (key == "door_order") {
      if (value.is_array()) {
        c.door_order = {DoorOrder::Mode::Explicit, value.get<std::vector<std::string>>()};
      } else {
        c.door_order = DoorOrder::parse(value.get<std::string>());
      }
    } else if (key == "appraisal") {
      if (!value.is_object()) throw Error("appraisal must be a JSON object");
      auto& a = c.appraisal;
      for (const auto& [akey, avalue] : value.items()) {
        if (akey == "valence_gain") {
          a.valence_gain = avalue.get<double>();
        } else if (akey == "arousal_gain") {
          a.arousal_gain = avalue.get<double>();
        } else if (akey == "decay_amount") {
          a.decay_amount = avalue.get<double>();
        } else if (akey == "decay_window_s") {
          a.decay_window_s = avalue.get<double>();
        } else if (akey == "clamp_lo") {
          a.clamp_lo = avalue.get<double>();
        } else if (akey == "clamp_hi") {
          a.clamp_hi = avalue.get<double>();
        } else {
          throw Error("unknown appraisal field '" + akey + "'");
        }
      }
    } else {
      throw Error("unknown run config field '" + key + "'");
    }
  }
}

RunConfig parse_run_config(std::string_view json_text) {
  RunConfig config;
  try {
    from_json(nlohmann::json::parse(json_text), config);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("run config: ") + e.what());
  }
  config.check();
  return config;
}

std::string run_config_to_json(const RunConfig& config) {
  nlohmann::json j;
  to_json(j, config);
  return j.dump(2);
}

}  // namespace uxagent
