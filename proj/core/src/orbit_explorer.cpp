#include "tsol/orbit_explorer.hpp"

#include <algorithm>
#include <boost/math/special_functions/lambert_w.hpp>
#include <cmath>
#include <cstdio>
#include <limits>
#include <random>
#include <string>
#include <unordered_map>

#include "tsol/errors.hpp"
#include "tsol/filling.hpp"
#include "tsol/lattice.hpp"

namespace tsol {

OrbitMasks orbit_masks(const Pattern& p, std::size_t vertex_cap) {
  OrbitMasks out{DenseFrame(fill(p)), {}, {}};
  const DenseFrame& frame = out.frame;
  std::unordered_map<CellMask, std::uint32_t> seen;
  const CellMask source = frame.encode(p);
  seen.emplace(source, 0);
  out.states.push_back(source);
  out.distance.push_back(0);
  for (std::size_t head = 0; head < out.states.size(); ++head) {
    const CellMask cur = out.states[head];
    const std::uint32_t d = out.distance[head];
    frame.for_each_neighbour(cur, [&](CellMask next) {
      if (!seen.emplace(next, static_cast<std::uint32_t>(out.states.size())).second) return;
      if (out.states.size() >= vertex_cap) throw CapExceeded(out.states.size());
      out.states.push_back(next);
      out.distance.push_back(d + 1);
    });
  }
  return out;
}

OrbitGraph orbit_bfs(const Pattern& p, std::size_t vertex_cap) {
  OrbitMasks om = orbit_masks(p, vertex_cap);
  std::unordered_map<CellMask, std::uint32_t> index;
  index.reserve(om.states.size());
  for (std::size_t i = 0; i < om.states.size(); ++i)
    index.emplace(om.states[i], static_cast<std::uint32_t>(i));
  OrbitGraph g;
  g.source = p;
  g.distance = om.distance;
  g.edges.resize(om.states.size());
  g.vertices.reserve(om.states.size());
  for (std::size_t i = 0; i < om.states.size(); ++i) {
    g.vertices.push_back(om.frame.decode(om.states[i]));
    om.frame.for_each_neighbour(om.states[i],
                                [&](CellMask next) { g.edges[i].push_back(index.at(next)); });
  }
  return g;
}

std::size_t orbit_size(const Pattern& p, std::size_t vertex_cap) {
  return orbit_masks(p, vertex_cap).states.size();
}

std::uint32_t diameter(const Pattern& p, std::size_t vertex_cap) {
  OrbitMasks om = orbit_masks(p, vertex_cap);
  const std::size_t count = om.states.size();
  std::unordered_map<CellMask, std::uint32_t> index;
  index.reserve(count);
  for (std::size_t i = 0; i < count; ++i) index.emplace(om.states[i], static_cast<std::uint32_t>(i));

  // Compressed adjacency.
  std::vector<std::uint32_t> offset(count + 1, 0), target;
  for (std::size_t i = 0; i < count; ++i) {
    om.frame.for_each_neighbour(om.states[i], [&](CellMask next) { target.push_back(index.at(next)); });
    offset[i + 1] = static_cast<std::uint32_t>(target.size());
  }

  std::uint32_t best = 0;
  std::vector<std::uint32_t> dist(count), queue(count);
  constexpr auto kUnseen = std::numeric_limits<std::uint32_t>::max();
  for (std::size_t s = 0; s < count; ++s) {
    std::fill(dist.begin(), dist.end(), kUnseen);
    std::size_t head = 0, tail = 0;
    queue[tail++] = static_cast<std::uint32_t>(s);
    dist[s] = 0;
    while (head < tail) {
      const std::uint32_t u = queue[head++];
      for (std::uint32_t e = offset[u]; e < offset[u + 1]; ++e) {
        const std::uint32_t w = target[e];
        if (dist[w] != kUnseen) continue;
        dist[w] = dist[u] + 1;
        queue[tail++] = w;
      }
    }
    best = std::max(best, dist[queue[tail - 1]]);
  }
  return best;
}

std::vector<CellMask> enumerate_fill_matrix_masks(int n) {
  if (n < 1) throw BadSize("n must be positive, got " + std::to_string(n));
  if (n > 8) throw TooLarge("fill matrix enumeration is limited to n <= 8");
  const DenseFrame frame = DenseFrame::triangle(n);
  // Column x of T_n holds x+1 cells; at most x+1 points may sit in columns 0..x.
  std::vector<std::vector<int>> columns(n);
  for (std::size_t i = 0; i < frame.cell_count(); ++i)
    columns[frame.cell(i).x].push_back(static_cast<int>(i));
  std::vector<CellMask> out;
  auto rec = [&](auto&& self, int col, CellMask mask, int count) -> void {
    if (col == n) {
      if (count == n && frame.fill(mask) == frame.full()) out.push_back(mask);
      return;
    }
    const auto& cells = columns[col];
    const unsigned subsets = 1u << cells.size();
    for (unsigned s = 0; s < subsets; ++s) {
      const int add = std::popcount(s);
      if (count + add > col + 1) continue;
      CellMask m = mask;
      for (std::size_t b = 0; b < cells.size(); ++b)
        if (s >> b & 1u) m |= CellMask{1} << cells[b];
      self(self, col + 1, m, count + add);
    }
  };
  rec(rec, 0, 0, 0);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Pattern> enumerate_fill_matrices(int n) {
  const DenseFrame frame = DenseFrame::triangle(n);
  std::vector<Pattern> out;
  for (CellMask m : enumerate_fill_matrix_masks(n)) out.push_back(frame.decode(m));
  std::sort(out.begin(), out.end());
  return out;
}

double orbit_count_constant() {
  const double e = std::exp(1.0);
  const double w = boost::math::lambert_w0(-2.0 / (e * e));
  return (4.0 + 2.0 * w) / (e * e * e * std::sqrt(2.0 * std::acos(-1.0)));
}

double orbit_upper_expression(int n) {
  if (n <= 1) return std::numeric_limits<double>::infinity();
  const double e = std::exp(1.0);
  return orbit_count_constant() * std::pow(e / 2.0, n) * std::pow(n - 1.0, n - 2.5);
}

std::uint64_t corner_lower_bound(int n) {
  std::uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
  return 3 * f - 3;
}

OrbitSizeReport check_orbit_size_bounds(int n, std::size_t vertex_cap, bool with_diameter) {
  OrbitSizeReport r;
  r.n = n;
  const Pattern line = edge_of_triangle(n, {0, 0}, Edge::Horizontal);
  r.orbit_size = orbit_size(line, vertex_cap);
  r.lower_bound = corner_lower_bound(n);
  r.upper_expression = orbit_upper_expression(n);
  r.lower_bound_holds = r.orbit_size >= r.lower_bound;
  if (with_diameter) r.diameter = diameter(line, vertex_cap);
  return r;
}

std::string render_census_text(const std::vector<OrbitSizeReport>& rows) {
  std::string out = "n, orbit_size, lower_bound_3nfact, upper_bound_expr, diameter\n";
  char buf[64];
  for (const auto& r : rows) {
    std::snprintf(buf, sizeof buf, "%.6g", r.upper_expression);
    out += std::to_string(r.n) + ", " + std::to_string(r.orbit_size) + ", " +
           std::to_string(r.lower_bound) + ", " + buf + ", " +
           (r.diameter ? std::to_string(*r.diameter) : std::string("-")) + "\n";
  }
  return out;
}

Pattern random_walk(const Pattern& p, std::uint64_t steps, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  Pattern cur = p;
  for (std::uint64_t i = 0; i < steps; ++i) {
    auto moves = legal_moves(cur);
    if (moves.empty()) break;
    std::uniform_int_distribution<std::size_t> pick(0, moves.size() - 1);
    const Move& m = moves[pick(rng)];
    cur.erase(m.from);
    cur.insert(m.to);
  }
  return cur;
}

}  // namespace tsol
