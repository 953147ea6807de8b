#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <unordered_map>
#include <vector>

#include "tsol/lattice.hpp"
#include "tsol/pattern.hpp"

namespace tsol {

using CellMask = std::uint64_t;

// Dense bitset view of subsets of a fixed cell set (at most 64 cells). Bit i
// is the i-th cell in RenderOrder, so for T_n this is row-major top-down.
class DenseFrame {
 public:
  static constexpr std::size_t kMaxCells = 64;

  explicit DenseFrame(const Pattern& cells);  // throws TooLarge above 64 cells
  static DenseFrame triangle(int n, Point v = {0, 0});

  std::size_t cell_count() const { return cells_.size(); }
  Point cell(std::size_t i) const { return cells_[i]; }
  const std::vector<Point>& cells() const { return cells_; }
  int index_of(Point p) const;  // -1 if outside
  CellMask full() const;

  CellMask encode(const Pattern& p) const;  // throws BadParams if p leaves the frame
  Pattern decode(CellMask m) const;

  struct Triangle {
    Point anchor;
    std::array<int, 3> bits;  // in kTriangleShape order
    CellMask mask = 0;
  };
  // Every anchor whose whole triangle lies in the frame, in RenderOrder of anchors.
  const std::vector<Triangle>& triangles() const { return triangles_; }

  // Closure under completion, restricted to the frame. Exact when the frame
  // is itself closed (e.g. a union of triangles).
  CellMask fill(CellMask m) const;

  // Calls f(next_mask) for every state one move away from m.
  template <class F>
  void for_each_neighbour(CellMask m, F&& f) const {
    for (const auto& t : triangles_) {
      CellMask occ = m & t.mask;
      if (std::popcount(occ) != 2) continue;
      CellMask empty = t.mask & ~occ;
      CellMask base = m | empty;
      for (CellMask rest = occ; rest; rest &= rest - 1) f(base & ~(rest & -rest));
    }
  }

 private:
  std::vector<Point> cells_;
  std::unordered_map<Point, int, PointHash> index_;
  std::vector<Triangle> triangles_;
};

}  // namespace tsol
