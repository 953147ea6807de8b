#include "tsol/pattern.hpp"

#include <algorithm>
#include <iterator>

namespace tsol {

Pattern::Pattern(std::initializer_list<Point> cells) : Pattern(std::vector<Point>(cells)) {}

Pattern::Pattern(std::vector<Point> cells) : cells_(std::move(cells)) {
  std::sort(cells_.begin(), cells_.end(), RenderOrder{});
  cells_.erase(std::unique(cells_.begin(), cells_.end()), cells_.end());
}

bool Pattern::contains(Point p) const {
  return std::binary_search(cells_.begin(), cells_.end(), p, RenderOrder{});
}

bool Pattern::insert(Point p) {
  auto it = std::lower_bound(cells_.begin(), cells_.end(), p, RenderOrder{});
  if (it != cells_.end() && *it == p) return false;
  cells_.insert(it, p);
  return true;
}

bool Pattern::erase(Point p) {
  auto it = std::lower_bound(cells_.begin(), cells_.end(), p, RenderOrder{});
  if (it == cells_.end() || *it != p) return false;
  cells_.erase(it);
  return true;
}

Pattern Pattern::translated(Point u) const {
  Pattern out;
  out.cells_.reserve(cells_.size());
  for (Point p : cells_) out.cells_.push_back(p + u);  // order is translation invariant
  return out;
}

BoundingBox Pattern::bounds() const {
  BoundingBox b{cells_.front(), cells_.front()};
  for (Point p : cells_) {
    b.lo.x = std::min(b.lo.x, p.x);
    b.lo.y = std::min(b.lo.y, p.y);
    b.hi.x = std::max(b.hi.x, p.x);
    b.hi.y = std::max(b.hi.y, p.y);
  }
  return b;
}

Pattern Pattern::united(const Pattern& other) const {
  Pattern out;
  std::set_union(cells_.begin(), cells_.end(), other.cells_.begin(), other.cells_.end(),
                 std::back_inserter(out.cells_), RenderOrder{});
  return out;
}

Pattern Pattern::minus(const Pattern& other) const {
  Pattern out;
  std::set_difference(cells_.begin(), cells_.end(), other.cells_.begin(), other.cells_.end(),
                      std::back_inserter(out.cells_), RenderOrder{});
  return out;
}

Pattern Pattern::intersected(const Pattern& other) const {
  Pattern out;
  std::set_intersection(cells_.begin(), cells_.end(), other.cells_.begin(),
                        other.cells_.end(), std::back_inserter(out.cells_), RenderOrder{});
  return out;
}

bool Pattern::is_subset_of(const Pattern& other) const {
  return std::includes(other.cells_.begin(), other.cells_.end(), cells_.begin(), cells_.end(),
                       RenderOrder{});
}

}  // namespace tsol
