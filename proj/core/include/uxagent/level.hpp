#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "uxagent/grid.hpp"

namespace uxagent {

enum class CellKind : std::uint8_t { Floor, Wall };

enum class ObjectKind : std::uint8_t { Door, Button, Goal };

std::string_view to_string(ObjectKind kind);

/// A door, a button or the goal (the chair). Buttons with `linked == false` are decoys.
struct GameObject {
  std::string id;
  ObjectKind kind = ObjectKind::Button;
  GridPos pos;
  bool linked = false;

  friend bool operator==(const GameObject&, const GameObject&) = default;
};

/// Static world description. Immutable once built, so one instance can back any
/// number of concurrent runs.
///
/// Construction never rejects a level: invariant violations are reported by
/// `validate()`. The only derived data is the per-button `linked` flag, which is
/// always recomputed from `links`.
class Level {
 public:
  Level() = default;
  Level(Grid<CellKind> cells, GridPos spawn, std::vector<GameObject> objects,
        std::map<std::string, std::string> links);

  int width() const { return cells_.width(); }
  int height() const { return cells_.height(); }
  bool in_bounds(GridPos p) const { return cells_.contains(p); }

  const Grid<CellKind>& cells() const { return cells_; }
  CellKind cell(GridPos p) const { return cells_.at(p); }
  GridPos spawn() const { return spawn_; }
  const std::vector<GameObject>& objects() const { return objects_; }
  /// button id -> door id
  const std::map<std::string, std::string>& links() const { return links_; }

  /// First object declared on `p`, or nullptr.
  const GameObject* object_at(GridPos p) const;
  const GameObject* find(std::string_view id) const;
  /// Index of `id` in objects(), if present.
  std::optional<std::size_t> index_of(std::string_view id) const;
  /// The goal, or nullptr. With several goals (an invalid level) the first one.
  const GameObject* goal() const;
  /// Door opened by `button_id`, or nullptr for decoys and unknown ids.
  const GameObject* linked_door(std::string_view button_id) const;

  friend bool operator==(const Level& a, const Level& b) {
    return a.cells_ == b.cells_ && a.spawn_ == b.spawn_ && a.objects_ == b.objects_ &&
           a.links_ == b.links_;
  }

 private:
  Grid<CellKind> cells_;
  GridPos spawn_;
  std::vector<GameObject> objects_;
  std::map<std::string, std::string> links_;
  Grid<int> object_index_;  // -1 when empty
};

/// Parses the `labrecruits-level v1` text format. Throws ParseError with the
/// offending line/column on syntax errors, duplicate ids, links to unknown ids
/// and objects placed on wall cells.
Level parse_level(std::string_view text);

/// Inverse of parse_level: parse_level(serialize_level(l)) == l for every
/// level whose objects sit on distinct in-bounds floor cells.
std::string serialize_level(const Level& level);

/// Violation descriptions; empty iff every level invariant holds and the goal
/// (if any) is reachable from spawn with all doors treated as openable.
std::vector<std::string> validate(const Level& level);

enum class MapId : std::uint8_t { M1, M2, M3, M4 };

inline constexpr MapId kAllMaps[] = {MapId::M1, MapId::M2, MapId::M3, MapId::M4};

std::string_view to_string(MapId id);
/// Accepts "M1".."M4" (case-insensitive). Throws Error on anything else.
MapId parse_map_id(std::string_view text);

/// The four built-in levels.
const Level& builtin(MapId id);
/// Level-file text of a built-in level, as shipped by `uxagent maps`.
std::string_view builtin_text(MapId id);

/// The door that seals the goal off from the rest of the level: the unique door
/// bordering the region of non-door cells around the goal. nullopt when the
/// level has no goal or that door is not unique.
std::optional<std::string> goal_door(const Level& level);

/// Copy of `level` with every Goal object removed (its cell stays Floor).
Level without_goal(const Level& level);

}  // namespace uxagent
