#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "uxagent/affect.hpp"
#include "uxagent/engine.hpp"

namespace uxagent {

/// Scripted override of which door-opening button the agent picks next.
struct DoorOrder {
  enum class Mode : std::uint8_t { Random, GoalFirst, GoalLast, Explicit };
  Mode mode = Mode::Random;
  std::vector<std::string> buttons;  // Explicit only

  /// "random", "goal-first", "goal-last", or a comma-separated button id list.
  static DoorOrder parse(std::string_view text);
  std::string to_string() const;

  friend bool operator==(const DoorOrder&, const DoorOrder&) = default;
};

struct RunConfig {
  double tick_s = 0.1;
  double move_period_s = 0.5;
  int fov_radius = 6;
  AppraisalConfig appraisal;
  bool spawn_percepts_arouse = false;
  std::uint64_t seed = 1;
  DoorOrder door_order;
  std::int64_t tick_limit = 100000;

  EngineConfig engine() const { return {tick_s, move_period_s}; }

  /// Throws Error unless tick_s > 0, move_period_s is a multiple of tick_s,
  /// fov_radius >= 1, tick_limit > 0 and the appraisal constants are sane.
  void check() const;

  friend bool operator==(const RunConfig&, const RunConfig&) = default;
};

/// JSON object mirroring the RunConfig field names; every field optional.
/// Unknown keys are rejected.
RunConfig parse_run_config(std::string_view json_text);
std::string run_config_to_json(const RunConfig& config);

}  // namespace uxagent
