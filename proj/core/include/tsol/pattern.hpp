#pragma once

#include <algorithm>
#include <initializer_list>
#include <span>
#include <vector>

#include "tsol/point.hpp"

namespace tsol {

struct BoundingBox {
  Point lo;
  Point hi;  // inclusive
};

// A finite set of lattice points. Cells are kept sorted in RenderOrder, so
// iteration, equality and serialization are all deterministic.
class Pattern {
 public:
  Pattern() = default;
  Pattern(std::initializer_list<Point> cells);
  explicit Pattern(std::vector<Point> cells);  // duplicates collapse

  bool contains(Point p) const;
  bool insert(Point p);  // false if already present
  bool erase(Point p);   // false if absent

  std::size_t size() const { return cells_.size(); }
  bool empty() const { return cells_.empty(); }
  std::span<const Point> cells() const { return cells_; }
  auto begin() const { return cells_.begin(); }
  auto end() const { return cells_.end(); }

  Pattern translated(Point u) const;
  BoundingBox bounds() const;  // pre: nonempty

  // Set algebra on sorted storage.
  Pattern united(const Pattern& other) const;
  Pattern minus(const Pattern& other) const;
  Pattern intersected(const Pattern& other) const;
  bool is_subset_of(const Pattern& other) const;

  friend bool operator==(const Pattern&, const Pattern&) = default;
  friend bool operator<(const Pattern& a, const Pattern& b) {
    return std::lexicographical_compare(a.cells_.begin(), a.cells_.end(), b.cells_.begin(),
                                        b.cells_.end(), RenderOrder{});
  }

 private:
  std::vector<Point> cells_;
};

}  // namespace tsol
