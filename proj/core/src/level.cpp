#include "uxagent/level.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <deque>
#include <set>
#include <sstream>

#include "uxagent/error.hpp"

namespace uxagent {

namespace {

constexpr std::string_view kHeader = "labrecruits-level v1";
constexpr std::string_view kGridAlphabet = "#.SGDb";

bool is_grid_line(std::string_view line) {
  return !line.empty() && line.find_first_not_of(kGridAlphabet) == std::string_view::npos;
}

bool is_id(std::string_view token) {
  return !token.empty() && std::all_of(token.begin(), token.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-';
  });
}

struct Token {
  std::string_view text;
  int column;  // 1-based
};

std::vector<Token> tokenize(std::string_view line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    if (i >= line.size()) break;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
    out.push_back({line.substr(start, i - start), static_cast<int>(start) + 1});
  }
  return out;
}

int parse_int(const Token& token, int line_no) {
  int value = 0;
  const auto* first = token.text.data();
  const auto* last = first + token.text.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last) {
    throw ParseError("expected integer, got '" + std::string(token.text) + "'", line_no,
                     token.column);
  }
  return value;
}

char grid_char_for(ObjectKind kind) {
  switch (kind) {
    case ObjectKind::Door: return 'D';
    case ObjectKind::Button: return 'b';
    case ObjectKind::Goal: return 'G';
  }
  return '?';
}

}  // namespace

std::string_view to_string(ObjectKind kind) {
  switch (kind) {
    case ObjectKind::Door: return "door";
    case ObjectKind::Button: return "button";
    case ObjectKind::Goal: return "goal";
  }
  return "?";
}

Level::Level(Grid<CellKind> cells, GridPos spawn, std::vector<GameObject> objects,
             std::map<std::string, std::string> links)
    : cells_(std::move(cells)),
      spawn_(spawn),
      objects_(std::move(objects)),
      links_(std::move(links)),
      object_index_(cells_.width(), cells_.height(), -1) {
  for (std::size_t i = 0; i < objects_.size(); ++i) {
    auto& obj = objects_[i];
    obj.linked = obj.kind == ObjectKind::Button && links_.contains(obj.id);
    if (object_index_.contains(obj.pos) && object_index_[obj.pos] < 0) {
      object_index_[obj.pos] = static_cast<int>(i);
    }
  }
}

const GameObject* Level::object_at(GridPos p) const {
  if (!object_index_.contains(p)) return nullptr;
  const int i = object_index_[p];
  return i < 0 ? nullptr : &objects_[static_cast<std::size_t>(i)];
}

const GameObject* Level::find(std::string_view id) const {
  auto i = index_of(id);
  return i ? &objects_[*i] : nullptr;
}

std::optional<std::size_t> Level::index_of(std::string_view id) const {
  for (std::size_t i = 0; i < objects_.size(); ++i) {
    if (objects_[i].id == id) return i;
  }
  return std::nullopt;
}

const GameObject* Level::goal() const {
  for (const auto& obj : objects_) {
    if (obj.kind == ObjectKind::Goal) return &obj;
  }
  return nullptr;
}

const GameObject* Level::linked_door(std::string_view button_id) const {
  auto it = links_.find(std::string(button_id));
  if (it == links_.end()) return nullptr;
  const auto* door = find(it->second);
  return door && door->kind == ObjectKind::Door ? door : nullptr;
}

Level parse_level(std::string_view text) {
  std::vector<std::string_view> lines;
  for (std::size_t start = 0; start <= text.size();) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back(line);
    start = end + 1;
  }
  if (lines.empty() || lines.front() != kHeader) {
    throw ParseError("missing header '" + std::string(kHeader) + "'", 1, 1);
  }

  std::vector<std::string_view> rows;
  std::vector<int> row_line_numbers;
  std::vector<GameObject> objects;
  std::vector<int> object_lines;
  std::map<std::string, std::string> links;
  bool grid_closed = false;

  for (std::size_t i = 1; i < lines.size(); ++i) {
    const int line_no = static_cast<int>(i) + 1;
    std::string_view line = lines[i];
    if (line.find_first_not_of(" \t") == std::string_view::npos) continue;

    if (!grid_closed && is_grid_line(line)) {
      if (!rows.empty() && line.size() != rows.front().size()) {
        throw ParseError("grid row has width " + std::to_string(line.size()) + ", expected " +
                             std::to_string(rows.front().size()),
                         line_no, static_cast<int>(std::min(line.size(), rows.front().size())) + 1);
      }
      rows.push_back(line);
      row_line_numbers.push_back(line_no);
      continue;
    }
    if (line.front() == '#') continue;  // comment
    if (rows.empty()) throw ParseError("expected grid row", line_no, 1);
    grid_closed = true;

    const auto tokens = tokenize(line);
    const std::string_view keyword = tokens.front().text;
    if (keyword == "door" || keyword == "button" || keyword == "goal") {
      if (tokens.size() != 4) {
        throw ParseError("expected '" + std::string(keyword) + " <id> <x> <y>'", line_no, 1);
      }
      if (!is_id(tokens[1].text)) {
        throw ParseError("invalid object id '" + std::string(tokens[1].text) + "'", line_no,
                         tokens[1].column);
      }
      GameObject obj;
      obj.id = std::string(tokens[1].text);
      obj.kind = keyword == "door"     ? ObjectKind::Door
                 : keyword == "button" ? ObjectKind::Button
                                       : ObjectKind::Goal;
      obj.pos = {parse_int(tokens[2], line_no), parse_int(tokens[3], line_no)};
      for (const auto& prev : objects) {
        if (prev.id == obj.id) {
          throw ParseError("duplicate object id '" + obj.id + "'", line_no, tokens[1].column);
        }
      }
      objects.push_back(std::move(obj));
      object_lines.push_back(line_no);
    } else if (keyword == "link") {
      if (tokens.size() != 4 || tokens[2].text != "->") {
        throw ParseError("expected 'link <button-id> -> <door-id>'", line_no, 1);
      }
      const std::string button(tokens[1].text);
      const std::string door(tokens[3].text);
      auto obj_it = std::find_if(objects.begin(), objects.end(),
                                 [&](const GameObject& o) { return o.id == button; });
      if (obj_it == objects.end() || obj_it->kind != ObjectKind::Button) {
        throw ParseError("link from unknown button '" + button + "'", line_no, tokens[1].column);
      }
      auto door_it = std::find_if(objects.begin(), objects.end(),
                                  [&](const GameObject& o) { return o.id == door; });
      if (door_it == objects.end() || door_it->kind != ObjectKind::Door) {
        throw ParseError("link to unknown door '" + door + "'", line_no, tokens[3].column);
      }
      if (!links.emplace(button, door).second) {
        throw ParseError("button '" + button + "' linked twice", line_no, tokens[1].column);
      }
    } else if (is_grid_line(line)) {
      throw ParseError("grid row after object block", line_no, 1);
    } else {
      throw ParseError("unknown directive '" + std::string(keyword) + "'", line_no,
                       tokens.front().column);
    }
  }

  if (rows.empty()) throw ParseError("level has no grid", static_cast<int>(lines.size()), 1);

  const int width = static_cast<int>(rows.front().size());
  const int height = static_cast<int>(rows.size());
  Grid<CellKind> cells(width, height, CellKind::Floor);
  std::optional<GridPos> spawn;
  for (int y = 0; y < height; ++y) {
    for (int x = 0; x < width; ++x) {
      const char c = rows[static_cast<std::size_t>(y)][static_cast<std::size_t>(x)];
      if (c == '#') cells[{x, y}] = CellKind::Wall;
      if (c == 'S') {
        if (spawn) {
          throw ParseError("second spawn marker", row_line_numbers[static_cast<std::size_t>(y)],
                           x + 1);
        }
        spawn = GridPos{x, y};
      }
    }
  }
  if (!spawn) throw ParseError("grid has no spawn marker 'S'", row_line_numbers.front(), 1);

  std::set<GridPos> declared;
  for (std::size_t i = 0; i < objects.size(); ++i) {
    const auto& obj = objects[i];
    const int line_no = object_lines[i];
    if (!cells.contains(obj.pos)) {
      throw ParseError("object '" + obj.id + "' at " + to_string(obj.pos) + " is outside the grid",
                       line_no, 1);
    }
    const char c = rows[static_cast<std::size_t>(obj.pos.y)][static_cast<std::size_t>(obj.pos.x)];
    if (c == '#') {
      throw ParseError("object '" + obj.id + "' on a wall cell " + to_string(obj.pos), line_no, 1);
    }
    if (c != grid_char_for(obj.kind)) {
      throw ParseError(std::string(to_string(obj.kind)) + " '" + obj.id + "' at " +
                           to_string(obj.pos) + " but grid has '" + std::string(1, c) + "'",
                       line_no, 1);
    }
    if (!declared.insert(obj.pos).second) {
      throw ParseError("second object declared on cell " + to_string(obj.pos), line_no, 1);
    }
  }
  for (int y = 0; y < height; ++y) {
    for (int x = 0; x < width; ++x) {
      const char c = rows[static_cast<std::size_t>(y)][static_cast<std::size_t>(x)];
      if ((c == 'D' || c == 'b' || c == 'G') && !declared.contains({x, y})) {
        throw ParseError("grid marker '" + std::string(1, c) + "' has no object declaration",
                         row_line_numbers[static_cast<std::size_t>(y)], x + 1);
      }
    }
  }

  return Level(std::move(cells), *spawn, std::move(objects), std::move(links));
}

std::string serialize_level(const Level& level) {
  std::ostringstream out;
  out << kHeader << '\n';
  for (int y = 0; y < level.height(); ++y) {
    std::string row(static_cast<std::size_t>(level.width()), '.');
    for (int x = 0; x < level.width(); ++x) {
      if (level.cells()[{x, y}] == CellKind::Wall) row[static_cast<std::size_t>(x)] = '#';
    }
    if (level.spawn().y == y && level.in_bounds(level.spawn())) {
      row[static_cast<std::size_t>(level.spawn().x)] = 'S';
    }
    for (const auto& obj : level.objects()) {
      if (obj.pos.y == y && level.in_bounds(obj.pos)) {
        row[static_cast<std::size_t>(obj.pos.x)] = grid_char_for(obj.kind);
      }
    }
    out << row << '\n';
  }
  for (const auto& obj : level.objects()) {
    out << to_string(obj.kind) << ' ' << obj.id << ' ' << obj.pos.x << ' ' << obj.pos.y << '\n';
  }
  for (const auto& [button, door] : level.links()) {
    out << "link " << button << " -> " << door << '\n';
  }
  return out.str();
}

std::vector<std::string> validate(const Level& level) {
  std::vector<std::string> out;
  auto is_floor = [&](GridPos p) { return level.in_bounds(p) && level.cell(p) == CellKind::Floor; };

  if (!is_floor(level.spawn())) {
    out.push_back("spawn " + to_string(level.spawn()) + " is not on a floor cell");
  }

  std::map<std::string, int> id_counts;
  std::map<GridPos, std::string> occupied;
  std::vector<std::string> goals;
  for (const auto& obj : level.objects()) {
    if (++id_counts[obj.id] == 2) out.push_back("duplicate object id " + obj.id);
    if (!is_floor(obj.pos)) {
      out.push_back(std::string(to_string(obj.kind)) + " " + obj.id + " at " + to_string(obj.pos) +
                    " is not on a floor cell");
    }
    if (auto [it, fresh] = occupied.emplace(obj.pos, obj.id); !fresh) {
      out.push_back("objects " + it->second + " and " + obj.id + " share cell " +
                    to_string(obj.pos));
    }
    if (obj.kind == ObjectKind::Goal) goals.push_back(obj.id);
  }

  std::map<std::string, std::vector<std::string>> buttons_per_door;
  for (const auto& [button, door] : level.links()) {
    const auto* b = level.find(button);
    if (!b || b->kind != ObjectKind::Button) out.push_back("link from unknown button " + button);
    const auto* d = level.find(door);
    if (!d || d->kind != ObjectKind::Door) out.push_back("link to unknown door " + door);
    buttons_per_door[door].push_back(button);
  }
  for (const auto& [door, buttons] : buttons_per_door) {
    if (buttons.size() > 1) {
      std::string list;
      for (const auto& b : buttons) list += (list.empty() ? "" : ", ") + b;
      out.push_back("door " + door + " linked from multiple buttons: " + list);
    }
  }

  if (goals.size() > 1) {
    std::string list;
    for (const auto& g : goals) list += (list.empty() ? "" : ", ") + g;
    out.push_back("multiple goals: " + list);
  }

  if (const auto* goal = level.goal(); goal && is_floor(level.spawn()) && is_floor(goal->pos)) {
    Grid<bool> seen(level.width(), level.height(), false);
    std::deque<GridPos> queue{level.spawn()};
    seen[level.spawn()] = true;
    bool reached = false;
    while (!queue.empty() && !reached) {
      const GridPos p = queue.front();
      queue.pop_front();
      if (p == goal->pos) reached = true;
      for (const GridPos n : neighbours(p)) {
        if (is_floor(n) && !seen[n]) {
          seen[n] = true;
          queue.push_back(n);
        }
      }
    }
    if (!reached) out.push_back("goal unreachable: " + goal->id);
  }
  return out;
}

std::string_view to_string(MapId id) {
  switch (id) {
    case MapId::M1: return "M1";
    case MapId::M2: return "M2";
    case MapId::M3: return "M3";
    case MapId::M4: return "M4";
  }
  return "?";
}

MapId parse_map_id(std::string_view text) {
  std::string upper(text);
  for (auto& c : upper) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  for (MapId id : kAllMaps) {
    if (upper == to_string(id)) return id;
  }
  throw Error("unknown map id '" + std::string(text) + "' (expected M1, M2, M3 or M4)");
}

const Level& builtin(MapId id) {
  static const Level levels[] = {
      parse_level(builtin_text(MapId::M1)),
      parse_level(builtin_text(MapId::M2)),
      parse_level(builtin_text(MapId::M3)),
      parse_level(builtin_text(MapId::M4)),
  };
  return levels[static_cast<int>(id)];
}

std::optional<std::string> goal_door(const Level& level) {
  const auto* goal = level.goal();
  if (!goal || !level.in_bounds(goal->pos)) return std::nullopt;
  Grid<bool> seen(level.width(), level.height(), false);
  std::deque<GridPos> queue{goal->pos};
  seen[goal->pos] = true;
  std::set<std::string> doors;
  while (!queue.empty()) {
    const GridPos p = queue.front();
    queue.pop_front();
    for (const GridPos n : neighbours(p)) {
      if (!level.in_bounds(n) || seen[n] || level.cell(n) == CellKind::Wall) continue;
      seen[n] = true;
      if (const auto* obj = level.object_at(n); obj && obj->kind == ObjectKind::Door) {
        doors.insert(obj->id);
        continue;
      }
      queue.push_back(n);
    }
  }
  if (doors.size() != 1) return std::nullopt;
  return *doors.begin();
}

Level without_goal(const Level& level) {
  std::vector<GameObject> objects;
  for (const auto& obj : level.objects()) {
    if (obj.kind != ObjectKind::Goal) objects.push_back(obj);
  }
  return Level(level.cells(), level.spawn(), std::move(objects), level.links());
}

}  // namespace uxagent
