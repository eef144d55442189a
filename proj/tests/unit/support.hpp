#pragma once

// Independent oracles and fixtures shared by the unit tests. Nothing here calls
// into the code it is used to check.

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <deque>
#include <ostream>
#include <random>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "uxagent/agent.hpp"
#include "uxagent/engine.hpp"
#include "uxagent/level.hpp"
#include "uxagent/trace.hpp"

namespace uxagent {

// Readable names for parameterized tests over the built-in maps.
inline void PrintTo(MapId id, std::ostream* os) { *os << to_string(id); }

}  // namespace uxagent

namespace uxagent::testing {

// Random level: border walls, random interior walls, a few unlinked doors and
// a floor spawn. Callers pick which doors count as open.
inline Level random_level(std::mt19937_64& rng, int width, int height, double wall_p = 0.25,
                          int doors = 6) {
  Grid<CellKind> cells(width, height, CellKind::Floor);
  std::bernoulli_distribution wall(wall_p);
  for (int y = 0; y < height; ++y) {
    for (int x = 0; x < width; ++x) {
      const bool border = x == 0 || y == 0 || x == width - 1 || y == height - 1;
      if (border || wall(rng)) cells[{x, y}] = CellKind::Wall;
    }
  }
  std::vector<GridPos> floor;
  for (int y = 0; y < height; ++y) {
    for (int x = 0; x < width; ++x) {
      if (cells[{x, y}] == CellKind::Floor) floor.push_back({x, y});
    }
  }
  std::shuffle(floor.begin(), floor.end(), rng);
  if (floor.empty()) {
    cells[{1, 1}] = CellKind::Floor;
    floor.push_back({1, 1});
  }
  const GridPos spawn = floor.back();
  floor.pop_back();
  std::vector<GameObject> objects;
  for (int i = 0; i < doors && !floor.empty(); ++i) {
    objects.push_back({"d" + std::to_string(i), ObjectKind::Door, floor.back(), false});
    floor.pop_back();
  }
  return Level(std::move(cells), spawn, std::move(objects), {});
}

// Segment oracle: the minor offset at major step i is the closed form
// floor((2*i*minor + major) / (2*major)), i.e. i*minor/major rounded half up.
inline std::vector<GridPos> oracle_line(GridPos a, GridPos b) {
  const int dx = b.x - a.x;
  const int dy = b.y - a.y;
  const int adx = dx < 0 ? -dx : dx;
  const int ady = dy < 0 ? -dy : dy;
  const int sx = dx < 0 ? -1 : 1;
  const int sy = dy < 0 ? -1 : 1;
  std::vector<GridPos> out;
  if (adx >= ady) {
    for (int i = 0; i <= adx; ++i) {
      const int off = adx == 0 ? 0 : (2 * i * ady + adx) / (2 * adx);
      out.push_back({a.x + sx * i, a.y + sy * off});
    }
  } else {
    for (int i = 0; i <= ady; ++i) {
      const int off = (2 * i * adx + ady) / (2 * ady);
      out.push_back({a.x + sx * off, a.y + sy * i});
    }
  }
  return out;
}

// Brute force: test every cell in the radius by walking the oracle segment.
inline std::vector<GridPos> oracle_visible(const Level& level, const std::vector<bool>& open, GridPos from,
                                    int radius) {
  auto opaque = [&](GridPos p) {
    if (level.cell(p) == CellKind::Wall) return true;
    for (std::size_t i = 0; i < level.objects().size(); ++i) {
      const auto& o = level.objects()[i];
      if (o.pos == p && o.kind == ObjectKind::Door) return !open[i];
    }
    return false;
  };
  std::vector<GridPos> out;
  for (int y = 0; y < level.height(); ++y) {
    for (int x = 0; x < level.width(); ++x) {
      const int dx = x - from.x;
      const int dy = y - from.y;
      if (dx * dx + dy * dy > radius * radius) continue;
      const auto seg = oracle_line(from, {x, y});
      bool clear = true;
      for (std::size_t i = 1; i + 1 < seg.size(); ++i) clear = clear && !opaque(seg[i]);
      if (clear) out.push_back({x, y});
    }
  }
  return out;
}

// A fully synthetic percept: every listed cell with the given kind.
struct MapSketch {
  int width = 0;
  int height = 0;
  std::vector<std::vector<int>> kind;  // -1 unknown, else SeenCell value
};

inline MapSketch random_sketch(std::mt19937_64& rng, int w, int h) {
  MapSketch s{w, h, std::vector<std::vector<int>>(h, std::vector<int>(w))};
  std::discrete_distribution<int> pick({10, 55, 20, 8, 7});  // unknown, floor, wall, closed, open
  for (auto& row : s.kind) {
    for (auto& k : row) k = pick(rng) - 1;
  }
  return s;
}

inline Percept to_percept(const MapSketch& s) {
  Percept p;
  for (int y = 0; y < s.height; ++y) {
    for (int x = 0; x < s.width; ++x) {
      if (s.kind[y][x] >= 0) p.cells.push_back({{x, y}, static_cast<SeenCell>(s.kind[y][x]), {}});
    }
  }
  return p;
}

inline bool sketch_passable(const MapSketch& s, GridPos p) {
  const int k = s.kind[p.y][p.x];
  return k == static_cast<int>(SeenCell::Floor) || k == static_cast<int>(SeenCell::OpenDoor);
}

inline std::vector<std::vector<bool>> open_grid(const MapSketch& s) {
  std::vector<std::vector<bool>> open(s.height, std::vector<bool>(s.width));
  for (int y = 0; y < s.height; ++y) {
    for (int x = 0; x < s.width; ++x) open[y][x] = sketch_passable(s, {x, y});
  }
  return open;
}

inline std::set<GridPos> oracle_frontiers(const MapSketch& s) {
  std::set<GridPos> out;
  for (int y = 0; y < s.height; ++y) {
    for (int x = 0; x < s.width; ++x) {
      if (!sketch_passable(s, {x, y})) continue;
      const int dxs[] = {1, -1, 0, 0};
      const int dys[] = {0, 0, 1, -1};
      for (int k = 0; k < 4; ++k) {
        const int nx = x + dxs[k];
        const int ny = y + dys[k];
        if (nx >= 0 && ny >= 0 && nx < s.width && ny < s.height && s.kind[ny][nx] < 0) {
          out.insert({x, y});
        }
      }
    }
  }
  return out;
}

// Plain BFS distance over a boolean passability grid; -1 if unreachable.
inline int oracle_distance(const std::vector<std::vector<bool>>& open, GridPos from, GridPos to) {
  const int h = static_cast<int>(open.size());
  const int w = static_cast<int>(open.front().size());
  std::vector<std::vector<int>> dist(h, std::vector<int>(w, -1));
  std::deque<GridPos> q{from};
  dist[from.y][from.x] = 0;
  while (!q.empty()) {
    const GridPos p = q.front();
    q.pop_front();
    if (p == to) return dist[p.y][p.x];
    const int dxs[] = {1, -1, 0, 0};
    const int dys[] = {0, 0, 1, -1};
    for (int k = 0; k < 4; ++k) {
      const int nx = p.x + dxs[k];
      const int ny = p.y + dys[k];
      if (nx < 0 || ny < 0 || nx >= w || ny >= h || !open[ny][nx] || dist[ny][nx] >= 0) continue;
      dist[ny][nx] = dist[p.y][p.x] + 1;
      q.push_back({nx, ny});
    }
  }
  return -1;
}

// Flood fill from spawn where a door counts as passable once a linked button
// for it lies in the reachable set. Iterates to a fixed point.
inline std::set<GridPos> oracle_reachable(const Level& level) {
  std::set<std::string> open_doors;
  std::set<GridPos> reach;
  for (;;) {
    reach.clear();
    std::deque<GridPos> q{level.spawn()};
    reach.insert(level.spawn());
    while (!q.empty()) {
      const GridPos p = q.front();
      q.pop_front();
      const int dxs[] = {1, -1, 0, 0};
      const int dys[] = {0, 0, 1, -1};
      for (int k = 0; k < 4; ++k) {
        const GridPos n{p.x + dxs[k], p.y + dys[k]};
        if (!level.in_bounds(n) || level.cell(n) == CellKind::Wall || reach.count(n)) continue;
        const GameObject* obj = level.object_at(n);
        if (obj && obj->kind == ObjectKind::Door && !open_doors.count(obj->id)) continue;
        reach.insert(n);
        q.push_back(n);
      }
    }
    std::size_t before = open_doors.size();
    for (const auto& [button, door] : level.links()) {
      const GameObject* b = level.find(button);
      if (!b) continue;
      // A button is pressable from any reachable 4-neighbour or its own cell.
      bool pressable = reach.count(b->pos) > 0;
      const int dxs[] = {1, -1, 0, 0};
      const int dys[] = {0, 0, 1, -1};
      for (int k = 0; k < 4 && !pressable; ++k) {
        pressable = reach.count({b->pos.x + dxs[k], b->pos.y + dys[k]}) > 0;
      }
      if (pressable) open_doors.insert(door);
    }
    if (open_doors.size() == before) return reach;
  }
}

// Minimal XML well-formedness check: balanced tags, quoted attributes,
// a single root element, and only the five predefined entities.
inline bool well_formed_xml(std::string_view doc, std::string* why = nullptr) {
  auto fail = [&](std::string msg) {
    if (why) *why = std::move(msg);
    return false;
  };
  std::vector<std::string> stack;
  int roots = 0;
  std::size_t i = 0;
  auto is_name = [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '-' || c == '_' || c == ':' ||
           c == '.';
  };
  auto check_text = [&](std::string_view text) {
    for (std::size_t k = 0; k < text.size(); ++k) {
      if (text[k] == '<') return false;
      if (text[k] == '&') {
        const auto semi = text.find(';', k);
        if (semi == std::string_view::npos) return false;
        const auto ent = text.substr(k + 1, semi - k - 1);
        if (ent != "amp" && ent != "lt" && ent != "gt" && ent != "quot" && ent != "apos") {
          return false;
        }
      }
    }
    return true;
  };
  while (i < doc.size()) {
    const auto lt = doc.find('<', i);
    const auto text = doc.substr(i, lt == std::string_view::npos ? doc.size() - i : lt - i);
    if (!check_text(text)) return fail("bad character data");
    if (stack.empty() && text.find_first_not_of(" \t\r\n") != std::string_view::npos) {
      return fail("text outside the root element");
    }
    if (lt == std::string_view::npos) break;
    if (doc.substr(lt, 5) == "<?xml") {
      const auto end = doc.find("?>", lt);
      if (end == std::string_view::npos || lt != 0) return fail("bad XML declaration");
      i = end + 2;
      continue;
    }
    if (doc.substr(lt, 4) == "<!--") {
      const auto end = doc.find("-->", lt);
      if (end == std::string_view::npos) return fail("unterminated comment");
      i = end + 3;
      continue;
    }
    const auto gt = doc.find('>', lt);
    if (gt == std::string_view::npos) return fail("unterminated tag");
    std::string_view tag = doc.substr(lt + 1, gt - lt - 1);
    i = gt + 1;
    if (!tag.empty() && tag.front() == '/') {
      const std::string name(tag.substr(1));
      if (stack.empty() || stack.back() != name) return fail("mismatched </" + name + ">");
      stack.pop_back();
      continue;
    }
    const bool self_closing = !tag.empty() && tag.back() == '/';
    if (self_closing) tag.remove_suffix(1);
    std::size_t k = 0;
    while (k < tag.size() && is_name(tag[k])) ++k;
    if (k == 0) return fail("empty tag name");
    const std::string name(tag.substr(0, k));
    std::set<std::string> attrs;
    while (k < tag.size()) {
      while (k < tag.size() && std::isspace(static_cast<unsigned char>(tag[k]))) ++k;
      if (k >= tag.size()) break;
      const std::size_t start = k;
      while (k < tag.size() && is_name(tag[k])) ++k;
      if (k == start || k >= tag.size() || tag[k] != '=') return fail("bad attribute in <" + name + ">");
      const std::string attr(tag.substr(start, k - start));
      if (!attrs.insert(attr).second) return fail("duplicate attribute " + attr);
      ++k;
      if (k >= tag.size() || (tag[k] != '"' && tag[k] != '\'')) return fail("unquoted attribute");
      const char quote = tag[k];
      const auto close = tag.find(quote, k + 1);
      if (close == std::string_view::npos) return fail("unterminated attribute");
      if (!check_text(tag.substr(k + 1, close - k - 1))) return fail("bad attribute value");
      k = close + 1;
    }
    if (stack.empty()) ++roots;
    if (roots > 1) return fail("more than one root element");
    if (!self_closing) stack.push_back(name);
  }
  if (!stack.empty()) return fail("unclosed <" + stack.back() + ">");
  if (roots != 1) return fail("no root element");
  return true;
}

// All values of attribute `attr` on elements whose class attribute equals `cls`,
// in document order.
inline std::vector<std::string> attribute_values(std::string_view svg, std::string_view cls,
                                                 std::string_view attr) {
  std::vector<std::string> out;
  const std::string cls_key = "class=\"" + std::string(cls) + "\"";
  const std::string attr_key = " " + std::string(attr) + "=\"";
  std::size_t pos = 0;
  while ((pos = svg.find(cls_key, pos)) != std::string_view::npos) {
    const auto start = svg.rfind('<', pos);
    const auto end = svg.find('>', pos);
    const auto element = svg.substr(start, end - start);
    const auto a = element.find(attr_key);
    if (a != std::string_view::npos) {
      const auto v = a + attr_key.size();
      out.emplace_back(element.substr(v, element.find('"', v) - v));
    }
    pos = end;
  }
  return out;
}

inline std::size_t count_events(const RunResult& run, std::string_view prefix) {
  std::size_t n = 0;
  for (const auto& r : run.trace) {
    for (const auto& e : r.events) n += e.rfind(prefix, 0) == 0 ? 1 : 0;
  }
  return n;
}

}  // namespace uxagent::testing
