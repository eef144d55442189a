#include "uxagent/events.hpp"

namespace uxagent {

namespace {

struct TagPrefix {
  EventKind kind;
  std::string_view prefix;
};

constexpr TagPrefix kPrefixed[] = {
    {EventKind::DoorOpened, "door_opened:"},
    {EventKind::NewInteractablePerceived, "new_interactable:"},
    {EventKind::ButtonPressedNoEffect, "press_no_effect:"},
};

constexpr std::string_view kGoalTag = "goal_found";

}  // namespace

std::string event_tag(const SimEvent& event) {
  if (event.kind == EventKind::GoalFound) return std::string(kGoalTag);
  for (const auto& p : kPrefixed) {
    if (p.kind == event.kind) return std::string(p.prefix) + event.object_id;
  }
  return {};
}

std::optional<SimEvent> parse_event_tag(std::string_view tag) {
  if (tag == kGoalTag) return SimEvent{EventKind::GoalFound, {}, 0.0, {}};
  for (const auto& p : kPrefixed) {
    if (tag.size() > p.prefix.size() && tag.substr(0, p.prefix.size()) == p.prefix) {
      return SimEvent{p.kind, std::string(tag.substr(p.prefix.size())), 0.0, {}};
    }
  }
  return std::nullopt;
}

}  // namespace uxagent
