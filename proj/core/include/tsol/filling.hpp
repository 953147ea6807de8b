#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "tsol/pattern.hpp"

namespace tsol {

// Optional instrumentation: counts cell visits of the closure worklist.
struct WorkCounter {
  std::uint64_t visits = 0;
};

enum class FillSchedule { Queue, Stack };

Pattern fill(const Pattern& p, FillSchedule schedule = FillSchedule::Queue,
             WorkCounter* counter = nullptr);

struct TrianglePart {
  Point anchor;
  int size = 0;
  friend bool operator==(const TrianglePart&, const TrianglePart&) = default;
};

struct TriangleDecomposition {
  std::vector<TrianglePart> parts;  // sorted by (anchor.y desc, anchor.x asc)
  std::int64_t total_filled = 0;
  // |P ∩ part| - size per part; empty unless produced from a source pattern.
  std::vector<std::int64_t> excess_per_part;
};

// pre: f is closed under the completion step. Throws NotAFilling otherwise.
TriangleDecomposition decompose(const Pattern& f, WorkCounter* counter = nullptr);

struct ExcessReport {
  std::int64_t excess = 0;
  std::vector<std::pair<std::size_t, std::int64_t>> per_part;  // (part index, count)
  TriangleDecomposition decomposition;
};

ExcessReport excess(const Pattern& p);
bool is_fill_matrix(const Pattern& p);

// Subsets U of p with |U| <= max_card and fill(p \ U) = fill(p), sorted by
// cardinality then lexicographically (RenderOrder). Throws TooLarge if |p| > 24.
inline constexpr std::size_t kExcessSetGuard = 24;
std::vector<Pattern> excess_sets(const Pattern& p, int max_card);
std::vector<Pattern> maximal_excess_sets(const Pattern& p);

}  // namespace tsol
