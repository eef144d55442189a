#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "uxagent/action.hpp"
#include "uxagent/engine.hpp"
#include "uxagent/rng.hpp"

namespace uxagent {

enum class KnownCell : std::uint8_t { Unknown, Floor, Wall, ClosedDoor, OpenDoor };

struct KnownObject {
  ObjectKind kind = ObjectKind::Button;
  GridPos pos;
  std::optional<std::string> linked_door;

  friend bool operator==(const KnownObject&, const KnownObject&) = default;
};

struct IntegrationResult {
  /// Buttons and doors seen for the first time, in row-major order of their cells.
  std::vector<std::string> newly_seen_interactables;
  bool goal_seen = false;
};

struct Finished {
  friend bool operator==(const Finished&, const Finished&) = default;
};
struct Exhausted {
  friend bool operator==(const Exhausted&, const Exhausted&) = default;
};

using Decision = std::variant<Move, Press, Wait, Finished, Exhausted>;

/// The agent's spatial memory.
///
/// Knowledge only grows. A frontier ("information limit") is a known Floor or
/// OpenDoor cell with at least one in-bounds 4-neighbour that is still
/// Unknown; the grid edge counts as a hard limit, like a wall.
class AgentWorldModel {
 public:
  AgentWorldModel(int width, int height, std::uint64_t seed);

  int width() const { return known_.width(); }
  int height() const { return known_.height(); }

  KnownCell known(GridPos p) const { return known_.contains(p) ? known_[p] : KnownCell::Wall; }
  const Grid<KnownCell>& known_grid() const { return known_; }
  std::size_t known_count() const { return known_count_; }
  /// Floor and open doors: the cells navigation may use.
  bool passable(GridPos p) const {
    const auto k = known(p);
    return k == KnownCell::Floor || k == KnownCell::OpenDoor;
  }

  const std::map<std::string, KnownObject>& known_objects() const { return objects_; }
  const std::set<GridPos>& frontiers() const { return frontiers_; }
  std::optional<GridPos> goal_position() const;

  /// Linked buttons the agent has already pressed.
  const std::set<std::string>& pressed() const { return pressed_; }
  /// Button the policy is committed to, if any.
  const std::optional<std::string>& committed_button() const { return committed_; }

  /// Scripted button priority that replaces the random choice of which door to
  /// open next. Buttons absent from the list fall back to the random choice.
  void set_door_order(std::vector<std::string> order) { door_order_ = std::move(order); }
  const std::vector<std::string>& door_order() const { return door_order_; }

  Xoshiro256ss& rng() { return rng_; }
  const Xoshiro256ss& rng() const { return rng_; }

 private:
  friend IntegrationResult integrate_percepts(AgentWorldModel&, const Percept&);
  friend Decision choose_action(AgentWorldModel&, GridPos);

  void recompute_frontiers();

  Grid<KnownCell> known_;
  std::size_t known_count_ = 0;
  std::map<std::string, KnownObject> objects_;
  std::set<GridPos> frontiers_;
  std::set<std::string> pressed_;
  std::optional<std::string> committed_;
  std::vector<std::string> door_order_;
  Xoshiro256ss rng_;
};

/// Folds a percept into the model and recomputes the frontier set. Throws
/// ContradictoryPercept if a cell changes in a way the world never allows
/// (anything other than Unknown -> x or ClosedDoor -> OpenDoor).
IntegrationResult integrate_percepts(AgentWorldModel& model, const Percept& percept);

/// Shortest 4-connected path over known passable cells, both endpoints
/// included; BFS expands neighbours in the order up, right, down, left.
/// nullopt when `to` is unreachable in the known map.
std::optional<std::vector<GridPos>> plan_path(const AgentWorldModel& model, GridPos from, GridPos to);

/// Reachable frontier with the smallest known-map path distance from `pos`,
/// ties broken by (row, column). Unreachable frontiers are skipped.
std::optional<GridPos> nearest_frontier(const AgentWorldModel& model, GridPos pos);

/// The search-and-traverse policy. With percepts already integrated:
///   1. goal known and reachable: walk to it (Finished once standing on it);
///   2. otherwise, if linked buttons for still-closed doors are known and
///      reachable: pick one (scripted order first, else uniformly at random
///      from the model's generator), commit to it, walk to it and press it;
///   3. otherwise walk toward the nearest reachable frontier;
///   4. otherwise Exhausted.
/// Returning Press records the button as pressed in the model.
Decision choose_action(AgentWorldModel& model, GridPos pos);

}  // namespace uxagent
