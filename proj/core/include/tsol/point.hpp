#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>

namespace tsol {

using Coord = std::int64_t;

struct Point {
  Coord x = 0;  // column, rightward
  Coord y = 0;  // row, upward

  friend constexpr Point operator+(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }
  friend constexpr Point operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
  friend constexpr Point operator-(Point a) { return {-a.x, -a.y}; }
  friend constexpr bool operator==(Point, Point) = default;
  friend constexpr auto operator<=>(Point, Point) = default;
};

// Rendering order used by every serializer: top row first, left to right.
struct RenderOrder {
  constexpr bool operator()(Point a, Point b) const {
    return a.y != b.y ? a.y > b.y : a.x < b.x;
  }
};

struct PointHash {
  std::size_t operator()(Point p) const noexcept {
    auto h = static_cast<std::uint64_t>(p.x) * 0x9E3779B97F4A7C15ull;
    h ^= static_cast<std::uint64_t>(p.y) + 0x632BE59BD9B4E019ull + (h << 6) + (h >> 2);
    return static_cast<std::size_t>(h);
  }
};

}  // namespace tsol
