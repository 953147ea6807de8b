#include "tsol/filling.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <string>
#include <unordered_set>

#include "tsol/errors.hpp"
#include "tsol/lattice.hpp"

namespace tsol {

Pattern fill(const Pattern& p, FillSchedule schedule, WorkCounter* counter) {
  std::unordered_set<Point, PointHash> filled(p.begin(), p.end());
  std::deque<Point> pending(p.begin(), p.end());
  std::uint64_t visits = 0;
  while (!pending.empty()) {
    Point x;
    if (schedule == FillSchedule::Queue) {
      x = pending.front();
      pending.pop_front();
    } else {
      x = pending.back();
      pending.pop_back();
    }
    for (Point off : kNeighbourOffsets) {
      ++visits;
      Point y = x + off;
      if (!filled.count(y)) continue;
      Point z = third_cell(x, y);
      if (filled.insert(z).second) pending.push_back(z);
    }
  }
  if (counter) counter->visits += visits;
  return Pattern(std::vector<Point>(filled.begin(), filled.end()));
}

TriangleDecomposition decompose(const Pattern& f, WorkCounter* counter) {
  TriangleDecomposition out;
  out.total_filled = static_cast<std::int64_t>(f.size());
  std::unordered_set<Point, PointHash> unseen(f.begin(), f.end());
  std::uint64_t visits = 0;
  for (Point seed : f) {
    if (!unseen.erase(seed)) continue;
    std::vector<Point> comp{seed};
    for (std::size_t i = 0; i < comp.size(); ++i) {
      for (Point off : kNeighbourOffsets) {
        ++visits;
        Point y = comp[i] + off;
        if (unseen.erase(y)) comp.push_back(y);
      }
    }
    BoundingBox b = Pattern(comp).bounds();
    const Coord k = b.hi.x - b.lo.x + 1;
    const bool ok = b.hi.y - b.lo.y + 1 == k &&
                    static_cast<Coord>(comp.size()) == k * (k + 1) / 2 &&
                    std::all_of(comp.begin(), comp.end(), [&](Point c) {
                      return in_triangle(c, static_cast<int>(k), b.lo);
                    });
    if (!ok)
      throw NotAFilling("component at (" + std::to_string(seed.x) + "," +
                        std::to_string(seed.y) + ") is not a triangle");
    out.parts.push_back({b.lo, static_cast<int>(k)});
  }
  // Equal anchors happen: T_1 at v fits in the empty corner of v + T_n.
  std::sort(out.parts.begin(), out.parts.end(), [](const TrianglePart& a, const TrianglePart& b) {
    if (a.anchor != b.anchor) return RenderOrder{}(a.anchor, b.anchor);
    return a.size < b.size;
  });
  if (counter) counter->visits += visits;
  return out;
}

ExcessReport excess(const Pattern& p) {
  ExcessReport r;
  r.decomposition = decompose(fill(p));
  auto& parts = r.decomposition.parts;
  std::vector<std::int64_t> inside(parts.size(), 0);
  for (Point c : p) {
    for (std::size_t i = 0; i < parts.size(); ++i) {
      if (in_triangle(c, parts[i].size, parts[i].anchor)) {
        ++inside[i];
        break;
      }
    }
  }
  for (std::size_t i = 0; i < parts.size(); ++i) {
    std::int64_t e = inside[i] - parts[i].size;
    r.per_part.emplace_back(i, e);
    r.decomposition.excess_per_part.push_back(e);
    r.excess += e;
  }
  return r;
}

bool is_fill_matrix(const Pattern& p) {
  if (p.empty()) return false;
  auto d = decompose(fill(p));
  return d.parts.size() == 1 && static_cast<std::size_t>(d.parts[0].size) == p.size();
}

std::vector<Pattern> excess_sets(const Pattern& p, int max_card) {
  if (p.size() > kExcessSetGuard)
    throw TooLarge("excess set enumeration is limited to " + std::to_string(kExcessSetGuard) +
                   " points, got " + std::to_string(p.size()));
  const auto target = fill(p).size();
  const auto limit = static_cast<std::size_t>(
      std::max<std::int64_t>(0, std::min<std::int64_t>(max_card, excess(p).excess)));
  const std::vector<Point> cells(p.begin(), p.end());

  std::vector<Pattern> out{Pattern{}};
  std::vector<Point> chosen;
  // Excess sets are closed under taking subsets, so a branch dies as soon as
  // its current set stops being one.
  std::function<void(std::size_t)> grow = [&](std::size_t start) {
    if (chosen.size() == limit) return;
    for (std::size_t i = start; i < cells.size(); ++i) {
      chosen.push_back(cells[i]);
      Pattern u(chosen);
      if (fill(p.minus(u)).size() == target) {
        out.push_back(std::move(u));
        grow(i + 1);
      }
      chosen.pop_back();
    }
  };
  grow(0);
  std::sort(out.begin(), out.end(), [](const Pattern& a, const Pattern& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  return out;
}

std::vector<Pattern> maximal_excess_sets(const Pattern& p) {
  auto all = excess_sets(p, static_cast<int>(p.size()));
  std::vector<Pattern> out;
  for (const auto& u : all) {
    bool maximal = true;
    for (const auto& w : all) {
      if (w.size() == u.size() + 1 && u.is_subset_of(w)) {
        maximal = false;
        break;
      }
    }
    if (maximal) out.push_back(u);
  }
  return out;
}

}  // namespace tsol
