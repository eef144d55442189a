#include "uxagent/agent.hpp"

#include <algorithm>
#include <deque>
#include <limits>

#include "uxagent/error.hpp"

namespace uxagent {

namespace {

constexpr int kUnreached = std::numeric_limits<int>::max();

KnownCell to_known(SeenCell seen) {
  switch (seen) {
    case SeenCell::Floor: return KnownCell::Floor;
    case SeenCell::Wall: return KnownCell::Wall;
    case SeenCell::ClosedDoor: return KnownCell::ClosedDoor;
    case SeenCell::OpenDoor: return KnownCell::OpenDoor;
  }
  return KnownCell::Unknown;
}

bool allowed_transition(KnownCell from, KnownCell to) {
  return from == to || from == KnownCell::Unknown ||
         (from == KnownCell::ClosedDoor && to == KnownCell::OpenDoor);
}

struct SearchTree {
  Grid<int> dist;
  Grid<int> parent;  // neighbour index (0..3) we arrived from, -1 at the root
};

SearchTree breadth_first(const AgentWorldModel& model, GridPos from) {
  SearchTree tree{Grid<int>(model.width(), model.height(), kUnreached),
                  Grid<int>(model.width(), model.height(), -1)};
  if (!model.passable(from)) return tree;
  std::deque<GridPos> queue{from};
  tree.dist[from] = 0;
  while (!queue.empty()) {
    const GridPos p = queue.front();
    queue.pop_front();
    const auto next = neighbours(p);
    for (int i = 0; i < 4; ++i) {
      const GridPos n = next[static_cast<std::size_t>(i)];
      if (!model.passable(n) || tree.dist[n] != kUnreached) continue;
      tree.dist[n] = tree.dist[p] + 1;
      tree.parent[n] = i;
      queue.push_back(n);
    }
  }
  return tree;
}

std::vector<GridPos> walk_back(const SearchTree& tree, GridPos to) {
  std::vector<GridPos> path{to};
  GridPos p = to;
  while (tree.parent[p] >= 0) {
    const GridPos step = kNeighbourOffsets[static_cast<std::size_t>(tree.parent[p])];
    p = {p.x - step.x, p.y - step.y};
    path.push_back(p);
  }
  std::reverse(path.begin(), path.end());
  return path;
}

}  // namespace

AgentWorldModel::AgentWorldModel(int width, int height, std::uint64_t seed)
    : known_(width, height, KnownCell::Unknown), rng_(seed) {}

std::optional<GridPos> AgentWorldModel::goal_position() const {
  for (const auto& [id, obj] : objects_) {
    if (obj.kind == ObjectKind::Goal) return obj.pos;
  }
  return std::nullopt;
}

void AgentWorldModel::recompute_frontiers() {
  frontiers_.clear();
  for (int y = 0; y < height(); ++y) {
    for (int x = 0; x < width(); ++x) {
      const GridPos p{x, y};
      if (!passable(p)) continue;
      for (const GridPos n : neighbours(p)) {
        if (known_.contains(n) && known_[n] == KnownCell::Unknown) {
          frontiers_.insert(p);
          break;
        }
      }
    }
  }
}

IntegrationResult integrate_percepts(AgentWorldModel& model, const Percept& percept) {
  IntegrationResult out;
  bool changed = false;
  for (const auto& cell : percept.cells) {
    if (!model.known_.contains(cell.pos)) {
      throw ContradictoryPercept("percept outside the known grid at " + to_string(cell.pos));
    }
    const KnownCell seen = to_known(cell.kind);
    KnownCell& slot = model.known_[cell.pos];
    if (!allowed_transition(slot, seen)) {
      throw ContradictoryPercept("cell " + to_string(cell.pos) + " changed from state " +
                                 std::to_string(static_cast<int>(slot)) + " to " +
                                 std::to_string(static_cast<int>(seen)));
    }
    if (slot != seen) {
      if (slot == KnownCell::Unknown) ++model.known_count_;
      slot = seen;
      changed = true;
    }
    if (!cell.object) continue;
    const auto& obj = *cell.object;
    auto [it, fresh] =
        model.objects_.try_emplace(obj.id, KnownObject{obj.kind, cell.pos, obj.linked_door});
    if (!fresh && (it->second.kind != obj.kind || it->second.pos != cell.pos)) {
      throw ContradictoryPercept("object '" + obj.id + "' moved or changed kind");
    }
    if (obj.kind == ObjectKind::Goal) {
      out.goal_seen = true;
    } else if (fresh) {
      out.newly_seen_interactables.push_back(obj.id);
    }
  }
  if (changed) model.recompute_frontiers();
  return out;
}

std::optional<std::vector<GridPos>> plan_path(const AgentWorldModel& model, GridPos from,
                                              GridPos to) {
  if (from == to) return std::vector<GridPos>{from};
  if (!model.passable(from) || !model.passable(to)) return std::nullopt;
  const auto tree = breadth_first(model, from);
  if (tree.dist[to] == kUnreached) return std::nullopt;
  return walk_back(tree, to);
}

std::optional<GridPos> nearest_frontier(const AgentWorldModel& model, GridPos pos) {
  if (model.frontiers().empty()) return std::nullopt;
  const auto tree = breadth_first(model, pos);
  std::optional<GridPos> best;
  int best_dist = kUnreached;
  // frontiers() iterates row-major, so the first strict minimum wins ties.
  for (const GridPos f : model.frontiers()) {
    if (tree.dist[f] < best_dist) {
      best_dist = tree.dist[f];
      best = f;
    }
  }
  return best;
}

Decision choose_action(AgentWorldModel& model, GridPos pos) {
  if (const auto goal = model.goal_position()) {
    if (*goal == pos) return Finished{};
    if (const auto path = plan_path(model, pos, *goal)) return Move{(*path)[1]};
  }

  auto pending = [&](const std::string& id) {
    auto it = model.objects_.find(id);
    return it != model.objects_.end() && it->second.kind == ObjectKind::Button &&
           it->second.linked_door && !model.pressed_.contains(id);
  };

  if (model.committed_ && !pending(*model.committed_)) model.committed_.reset();
  if (!model.committed_) {
    std::vector<std::string> candidates;  // id order
    for (const auto& [id, obj] : model.objects_) {
      if (pending(id) && plan_path(model, pos, obj.pos)) candidates.push_back(id);
    }
    if (!candidates.empty()) {
      for (const auto& id : model.door_order_) {
        if (std::find(candidates.begin(), candidates.end(), id) != candidates.end()) {
          model.committed_ = id;
          break;
        }
      }
      if (!model.committed_) {
        model.committed_ = candidates[model.rng_.uniform(candidates.size())];
      }
    }
  }

  if (model.committed_) {
    const std::string target = *model.committed_;
    const GridPos button = model.objects_.at(target).pos;
    if (manhattan(button, pos) <= 1) {
      model.pressed_.insert(target);
      model.committed_.reset();
      return Press{target};
    }
    if (const auto path = plan_path(model, pos, button)) return Move{(*path)[1]};
    // Knowledge and doors are monotone, so a committed button stays reachable.
    model.committed_.reset();
  }

  if (const auto frontier = nearest_frontier(model, pos)) {
    const auto path = plan_path(model, pos, *frontier);
    if (path && path->size() > 1) return Move{(*path)[1]};
  }
  return Exhausted{};
}

}  // namespace uxagent
