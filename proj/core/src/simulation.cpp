#include "uxagent/simulation.hpp"

#include <algorithm>

#include "uxagent/error.hpp"

namespace uxagent {

std::vector<std::string> resolve_door_order(const Level& level, const DoorOrder& order) {
  std::vector<std::string> linked;
  for (const auto& obj : level.objects()) {
    if (obj.kind == ObjectKind::Button && obj.linked) linked.push_back(obj.id);
  }

  switch (order.mode) {
    case DoorOrder::Mode::Random:
      return {};
    case DoorOrder::Mode::Explicit:
      for (const auto& id : order.buttons) {
        if (std::find(linked.begin(), linked.end(), id) == linked.end()) {
          throw Error("door order names '" + id + "', which is not a linked button");
        }
      }
      return order.buttons;
    case DoorOrder::Mode::GoalFirst:
    case DoorOrder::Mode::GoalLast:
      break;
  }

  const auto door = goal_door(level);
  if (!door) throw Error("door order " + order.to_string() + " needs a level whose goal sits behind one door");
  std::string goal_button;
  for (const auto& [button, linked_door] : level.links()) {
    if (linked_door == *door) goal_button = button;
  }
  if (goal_button.empty()) throw Error("the goal door " + *door + " has no button");

  std::vector<std::string> out;
  if (order.mode == DoorOrder::Mode::GoalFirst) out.push_back(goal_button);
  for (const auto& id : linked) {
    if (id != goal_button) out.push_back(id);
  }
  if (order.mode == DoorOrder::Mode::GoalLast) out.push_back(goal_button);
  return out;
}

Simulation::Simulation(const Level& level, RunConfig config, std::string map_id)
    : level_(&level),
      config_((config.check(), std::move(config))),
      map_id_(std::move(map_id)),
      world_(level, config_.engine()),
      model_(level.width(), level.height(), config_.seed) {
  model_.set_door_order(resolve_door_order(level, config_.door_order));

  const auto seen = integrate_percepts(model_, perceive(world_, config_.fov_radius));
  std::vector<SimEvent> events;
  if (config_.spawn_percepts_arouse) {
    for (const auto& id : seen.newly_seen_interactables) {
      events.push_back({EventKind::NewInteractablePerceived, id, 0.0, world_.agent_pos()});
    }
  }
  affect_ = apply_events(affect_, events, config_.appraisal);
  record(std::move(events));
}

void Simulation::record(std::vector<SimEvent> events) {
  TraceRecord r;
  r.tick = world_.tick();
  r.time_s = world_.clock_s();
  r.pos = world_.agent_pos();
  r.valence = affect_.valence;
  r.arousal = affect_.arousal;
  for (const auto& e : events) r.events.push_back(event_tag(e));
  trace_.record_tick(std::move(r));
  event_log_.insert(event_log_.end(), std::make_move_iterator(events.begin()),
                    std::make_move_iterator(events.end()));
}

bool Simulation::advance() {
  if (outcome_) return false;
  if (world_.finished()) {
    outcome_ = Outcome::GoalFound;
    return false;
  }

  const Decision decision = choose_action(model_, world_.agent_pos());
  if (std::holds_alternative<Exhausted>(decision)) {
    outcome_ = Outcome::Exhausted;
    return false;
  }
  if (std::holds_alternative<Finished>(decision)) {
    // Standing on the goal always ends the run inside step(); reaching this is a bug.
    throw Error("agent reports the goal reached but the world is not finished");
  }
  if (world_.tick() >= config_.tick_limit) {
    throw TickLimitExceeded("tick limit " + std::to_string(config_.tick_limit) + " exceeded");
  }

  AgentAction action = Wait{};
  if (const auto* m = std::get_if<Move>(&decision)) action = *m;
  if (const auto* p = std::get_if<Press>(&decision)) action = *p;

  std::vector<SimEvent> events = world_.step(action);
  const auto seen = integrate_percepts(model_, perceive(world_, config_.fov_radius));
  for (const auto& id : seen.newly_seen_interactables) {
    events.push_back(
        {EventKind::NewInteractablePerceived, id, world_.clock_s(), world_.agent_pos()});
  }

  affect_ = apply_events(affect_, events, config_.appraisal);
  affect_ = tick_decay(affect_, config_.tick_s, config_.appraisal);
  record(std::move(events));

  if (world_.finished()) {
    outcome_ = Outcome::GoalFound;
    return false;
  }
  return true;
}

RunResult Simulation::run() && {
  while (advance()) {
  }
  return std::move(trace_).finish(*outcome_, config_.seed, std::move(map_id_), std::move(config_));
}

RunResult run_simulation(const Level& level, const RunConfig& config, std::string map_id) {
  return Simulation(level, config, std::move(map_id)).run();
}

}  // namespace uxagent
