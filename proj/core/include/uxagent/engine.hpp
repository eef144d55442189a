#pragma once

#include <cmath>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "uxagent/action.hpp"
#include "uxagent/events.hpp"
#include "uxagent/level.hpp"

namespace uxagent {

struct EngineConfig {
  double tick_s = 0.1;
  double move_period_s = 0.5;

  /// Ticks needed to complete one move; move_period_s must be a positive
  /// multiple of tick_s.
  int ticks_per_move() const;
};

/// Cells visible from `from`: every cell within Euclidean `radius` whose
/// Bresenham segment from `from` crosses no wall and no closed door before
/// reaching it. Obstacle faces themselves are visible. Sorted row-major.
///
/// `door_open` is indexed like level.objects(); entries for non-doors are ignored.
std::vector<GridPos> visible_cells(const Level& level, const std::vector<bool>& door_open,
                                   GridPos from, int radius);

/// Cells of the discretised segment a -> b, both endpoints included. Along the
/// major axis step i lands on minor offset round(i * minor / major), with
/// halves rounded away from `a`.
std::vector<GridPos> line_cells(GridPos a, GridPos b);

enum class SeenCell : std::uint8_t { Floor, Wall, ClosedDoor, OpenDoor };

struct SeenObject {
  std::string id;
  ObjectKind kind = ObjectKind::Button;
  /// Door id for linked buttons; the agent knows how buttons and doors pair up.
  std::optional<std::string> linked_door;
};

struct PerceivedCell {
  GridPos pos;
  SeenCell kind = SeenCell::Floor;
  std::optional<SeenObject> object;
};

struct Percept {
  GridPos from;
  std::vector<PerceivedCell> cells;  // row-major
};

/// Ground-truth world: agent pose, door flags, pressed buttons, clock.
class WorldState {
 public:
  /// `level` must outlive the state.
  WorldState(const Level& level, EngineConfig config);

  const Level& level() const { return *level_; }
  const EngineConfig& config() const { return config_; }

  GridPos agent_pos() const { return agent_pos_; }
  std::int64_t tick() const { return tick_; }
  /// tick * tick_s, rounded to a multiple of 1e-9 s.
  double clock_s() const {
    return std::round(static_cast<double>(tick_) * config_.tick_s * 1e9) / 1e9;
  }
  bool finished() const { return finished_; }

  bool door_open(std::string_view door_id) const;
  const std::vector<bool>& door_flags() const { return door_open_; }
  const std::set<std::string>& pressed() const { return pressed_; }

  /// Move currently in progress, if any, and the ticks already spent on it.
  std::optional<GridPos> move_target() const { return move_target_; }
  int move_progress() const { return move_progress_; }

  /// Floor cell without a closed door.
  bool passable(GridPos p) const;
  bool opaque(GridPos p) const { return !passable(p); }

  /// Advances the clock by one tick and applies `action`. Throws IllegalAction
  /// for moves into walls/closed doors or non-adjacent cells, presses out of
  /// range or of non-buttons, and any step once finished. A rejected action
  /// leaves the state untouched.
  std::vector<SimEvent> step(const AgentAction& action);

 private:
  const Level* level_;
  EngineConfig config_;
  int ticks_per_move_;
  GridPos agent_pos_;
  std::vector<bool> door_open_;
  std::set<std::string> pressed_;
  std::int64_t tick_ = 0;
  bool finished_ = false;
  std::optional<GridPos> move_target_;
  int move_progress_ = 0;
};

/// What the agent sees from its current cell.
Percept perceive(const WorldState& state, int radius);

}  // namespace uxagent
