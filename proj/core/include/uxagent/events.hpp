#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "uxagent/grid.hpp"

namespace uxagent {

enum class EventKind : std::uint8_t {
  DoorOpened,
  GoalFound,
  NewInteractablePerceived,
  ButtonPressedNoEffect,
};

struct SimEvent {
  EventKind kind = EventKind::GoalFound;
  std::string object_id;  // empty for GoalFound
  double at_s = 0.0;
  GridPos at_pos;

  friend bool operator==(const SimEvent&, const SimEvent&) = default;
};

/// Trace tag: `door_opened:<id>`, `goal_found`, `new_interactable:<id>`, `press_no_effect:<id>`.
std::string event_tag(const SimEvent& event);

/// Inverse of event_tag for kind and object id; time and position are left default.
std::optional<SimEvent> parse_event_tag(std::string_view tag);

}  // namespace uxagent
