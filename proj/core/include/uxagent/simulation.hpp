#pragma once

#include <string>
#include <vector>

#include "uxagent/affect.hpp"
#include "uxagent/agent.hpp"
#include "uxagent/config.hpp"
#include "uxagent/engine.hpp"
#include "uxagent/level.hpp"
#include "uxagent/trace.hpp"

namespace uxagent {

/// Button priority list for a scripted door order. goal-first puts the button
/// of the goal's door first, goal-last puts it last; the other linked buttons
/// follow level order. Explicit lists are checked against the level's linked
/// buttons. Random yields an empty list.
std::vector<std::string> resolve_door_order(const Level& level, const DoorOrder& order);

/// One run of the agent on a level.
///
/// Tick 0 perceives the spawn surroundings and records the neutral state. Every
/// later tick runs decide -> act -> perceive -> integrate -> affect events ->
/// affect decay -> record, so an event's affect change shows up in the record
/// of the tick that produced it.
class Simulation {
 public:
  /// `level` must outlive the simulation. Throws Error on an invalid config
  /// or door order.
  Simulation(const Level& level, RunConfig config, std::string map_id = "custom");

  /// Runs one tick. Returns false once the run has ended (goal reached or
  /// nothing left to explore). Throws TickLimitExceeded past the tick limit.
  bool advance();

  /// Advances until the run ends and returns the completed result.
  RunResult run() &&;

  bool done() const { return outcome_.has_value(); }
  const WorldState& world() const { return world_; }
  const AgentWorldModel& model() const { return model_; }
  const AffectState& affect() const { return affect_; }
  const std::vector<TraceRecord>& records() const { return trace_.records(); }
  const std::vector<SimEvent>& event_log() const { return event_log_; }

 private:
  void record(std::vector<SimEvent> events);

  const Level* level_;
  RunConfig config_;
  std::string map_id_;
  WorldState world_;
  AgentWorldModel model_;
  AffectState affect_ = initial_affect();
  TraceBuilder trace_;
  std::vector<SimEvent> event_log_;
  std::optional<Outcome> outcome_;
};

/// Convenience wrapper: Simulation(level, config, map_id).run().
RunResult run_simulation(const Level& level, const RunConfig& config, std::string map_id = "custom");

}  // namespace uxagent
