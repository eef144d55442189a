#include "uxagent/engine.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>

#include "uxagent/error.hpp"

namespace uxagent {

int EngineConfig::ticks_per_move() const {
  if (!(tick_s > 0.0) || !(move_period_s > 0.0)) {
    throw Error("tick_s and move_period_s must be positive");
  }
  const double ratio = move_period_s / tick_s;
  const double rounded = std::round(ratio);
  if (rounded < 1.0 || std::abs(ratio - rounded) > 1e-9 * std::max(1.0, ratio)) {
    throw Error("move_period_s must be a multiple of tick_s");
  }
  return static_cast<int>(rounded);
}

std::vector<GridPos> line_cells(GridPos a, GridPos b) {
  const int dx = b.x - a.x;
  const int dy = b.y - a.y;
  const int sx = dx < 0 ? -1 : 1;
  const int sy = dy < 0 ? -1 : 1;
  const bool x_major = std::abs(dx) >= std::abs(dy);
  const int major = x_major ? std::abs(dx) : std::abs(dy);
  const int minor = x_major ? std::abs(dy) : std::abs(dx);

  std::vector<GridPos> out;
  out.reserve(static_cast<std::size_t>(major) + 1);
  out.push_back(a);
  // Remainder of (2*i*minor + major) modulo 2*major; the minor coordinate
  // advances whenever it wraps.
  int remainder = major;
  int offset = 0;
  for (int i = 1; i <= major; ++i) {
    remainder += 2 * minor;
    if (remainder >= 2 * major) {
      remainder -= 2 * major;
      ++offset;
    }
    if (x_major) {
      out.push_back({a.x + i * sx, a.y + offset * sy});
    } else {
      out.push_back({a.x + offset * sx, a.y + i * sy});
    }
  }
  return out;
}

std::vector<GridPos> visible_cells(const Level& level, const std::vector<bool>& door_open,
                                   GridPos from, int radius) {
  auto opaque = [&](GridPos p) {
    if (level.cell(p) == CellKind::Wall) return true;
    const auto* obj = level.object_at(p);
    if (!obj || obj->kind != ObjectKind::Door) return false;
    const auto idx = static_cast<std::size_t>(obj - level.objects().data());
    return idx >= door_open.size() || !door_open[idx];
  };

  std::vector<GridPos> out;
  if (!level.in_bounds(from) || radius < 0) return out;
  const long r2 = static_cast<long>(radius) * radius;
  for (int y = std::max(0, from.y - radius); y <= std::min(level.height() - 1, from.y + radius); ++y) {
    for (int x = std::max(0, from.x - radius); x <= std::min(level.width() - 1, from.x + radius);
         ++x) {
      const long ddx = x - from.x;
      const long ddy = y - from.y;
      if (ddx * ddx + ddy * ddy > r2) continue;
      const auto line = line_cells(from, {x, y});
      bool blocked = false;
      for (std::size_t i = 1; i + 1 < line.size(); ++i) {
        if (opaque(line[i])) {
          blocked = true;
          break;
        }
      }
      if (!blocked) out.push_back({x, y});
    }
  }
  return out;
}

WorldState::WorldState(const Level& level, EngineConfig config)
    : level_(&level),
      config_(config),
      ticks_per_move_(config.ticks_per_move()),
      agent_pos_(level.spawn()),
      door_open_(level.objects().size(), false) {}

bool WorldState::door_open(std::string_view door_id) const {
  auto idx = level_->index_of(door_id);
  return idx && door_open_[*idx];
}

bool WorldState::passable(GridPos p) const {
  if (!level_->in_bounds(p) || level_->cell(p) == CellKind::Wall) return false;
  const auto* obj = level_->object_at(p);
  if (!obj || obj->kind != ObjectKind::Door) return true;
  return door_open_[static_cast<std::size_t>(obj - level_->objects().data())];
}

std::vector<SimEvent> WorldState::step(const AgentAction& action) {
  if (finished_) throw IllegalAction("step after the run finished");

  const GameObject* button = nullptr;
  if (const auto* move = std::get_if<Move>(&action)) {
    if (manhattan(move->target, agent_pos_) != 1) {
      throw IllegalAction("move to non-adjacent cell " + to_string(move->target));
    }
    if (!passable(move->target)) {
      throw IllegalAction("move into blocked cell " + to_string(move->target));
    }
  } else if (const auto* press = std::get_if<Press>(&action)) {
    button = level_->find(press->button_id);
    if (!button || button->kind != ObjectKind::Button) {
      throw IllegalAction("press of non-button '" + press->button_id + "'");
    }
    if (manhattan(button->pos, agent_pos_) > 1) {
      throw IllegalAction("button '" + press->button_id + "' out of interaction range");
    }
  }

  std::vector<SimEvent> events;
  ++tick_;
  auto emit = [&](EventKind kind, std::string id) {
    events.push_back({kind, std::move(id), clock_s(), agent_pos_});
  };

  if (const auto* move = std::get_if<Move>(&action)) {
    if (move_target_ != move->target) {
      move_target_ = move->target;
      move_progress_ = 0;
    }
    if (++move_progress_ >= ticks_per_move_) {
      agent_pos_ = move->target;
      move_target_.reset();
      move_progress_ = 0;
      if (const auto* obj = level_->object_at(agent_pos_); obj && obj->kind == ObjectKind::Goal) {
        finished_ = true;
        emit(EventKind::GoalFound, {});
      }
    }
  } else if (button) {
    move_target_.reset();
    move_progress_ = 0;
    pressed_.insert(button->id);
    if (const auto* door = level_->linked_door(button->id)) {
      const auto idx = static_cast<std::size_t>(door - level_->objects().data());
      if (!door_open_[idx]) {
        door_open_[idx] = true;
        emit(EventKind::DoorOpened, door->id);
      }
    } else {
      emit(EventKind::ButtonPressedNoEffect, button->id);
    }
  } else {
    move_target_.reset();
    move_progress_ = 0;
  }
  return events;
}

Percept perceive(const WorldState& state, int radius) {
  const Level& level = state.level();
  Percept out{state.agent_pos(), {}};
  for (const GridPos p : visible_cells(level, state.door_flags(), state.agent_pos(), radius)) {
    PerceivedCell cell{p, SeenCell::Floor, std::nullopt};
    if (level.cell(p) == CellKind::Wall) cell.kind = SeenCell::Wall;
    if (const auto* obj = level.object_at(p)) {
      SeenObject seen{obj->id, obj->kind, std::nullopt};
      if (obj->kind == ObjectKind::Door) {
        cell.kind = state.passable(p) ? SeenCell::OpenDoor : SeenCell::ClosedDoor;
      } else if (const auto* door = level.linked_door(obj->id)) {
        seen.linked_door = door->id;
      }
      cell.object = std::move(seen);
    }
    out.cells.push_back(std::move(cell));
  }
  return out;
}

}  // namespace uxagent
