#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdlib>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace uxagent {

/// Grid coordinate: column `x`, row `y`, origin at the top-left cell.
///
/// Ordering is row-major (row first, then column). Frontier tie-breaking and
/// every ordered container of cells in the project rely on this.
struct GridPos {
  int x = 0;
  int y = 0;

  friend constexpr bool operator==(GridPos, GridPos) = default;
  friend constexpr std::strong_ordering operator<=>(GridPos a, GridPos b) {
    if (auto c = a.y <=> b.y; c != 0) return c;
    return a.x <=> b.x;
  }
};

inline std::string to_string(GridPos p) {
  return "(" + std::to_string(p.x) + "," + std::to_string(p.y) + ")";
}

constexpr int manhattan(GridPos a, GridPos b) {
  return std::abs(a.x - b.x) + std::abs(a.y - b.y);
}

/// 4-neighbourhood in the canonical order up, right, down, left.
constexpr std::array<GridPos, 4> kNeighbourOffsets{{{0, -1}, {1, 0}, {0, 1}, {-1, 0}}};

constexpr std::array<GridPos, 4> neighbours(GridPos p) {
  std::array<GridPos, 4> out{};
  for (std::size_t i = 0; i < 4; ++i) {
    out[i] = {p.x + kNeighbourOffsets[i].x, p.y + kNeighbourOffsets[i].y};
  }
  return out;
}

/// Dense row-major storage for per-cell data.
template <typename T>
class Grid {
 public:
  Grid() = default;
  Grid(int width, int height, T fill = T{})
      : width_(width), height_(height),
        cells_(static_cast<std::size_t>(width) * static_cast<std::size_t>(height), fill) {
    if (width < 0 || height < 0) throw std::invalid_argument("negative grid dimensions");
  }

  int width() const { return width_; }
  int height() const { return height_; }
  std::size_t size() const { return cells_.size(); }

  bool contains(GridPos p) const {
    return p.x >= 0 && p.y >= 0 && p.x < width_ && p.y < height_;
  }

  std::size_t index(GridPos p) const {
    return static_cast<std::size_t>(p.y) * static_cast<std::size_t>(width_) +
           static_cast<std::size_t>(p.x);
  }
  GridPos pos(std::size_t index) const {
    return {static_cast<int>(index % static_cast<std::size_t>(width_)),
            static_cast<int>(index / static_cast<std::size_t>(width_))};
  }

  typename std::vector<T>::reference operator[](GridPos p) { return cells_[index(p)]; }
  typename std::vector<T>::const_reference operator[](GridPos p) const { return cells_[index(p)]; }

  typename std::vector<T>::const_reference at(GridPos p) const {
    if (!contains(p)) throw std::out_of_range("grid position " + to_string(p) + " out of range");
    return cells_[index(p)];
  }

  const std::vector<T>& data() const { return cells_; }

  friend bool operator==(const Grid&, const Grid&) = default;

 private:
  int width_ = 0;
  int height_ = 0;
  std::vector<T> cells_;
};

}  // namespace uxagent

template <>
struct std::hash<uxagent::GridPos> {
  std::size_t operator()(uxagent::GridPos p) const noexcept {
    return std::hash<long long>{}((static_cast<long long>(p.y) << 32) ^ static_cast<unsigned>(p.x));
  }
};
