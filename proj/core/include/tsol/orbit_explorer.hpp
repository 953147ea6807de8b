#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tsol/dense_frame.hpp"
#include "tsol/pattern.hpp"

namespace tsol {

inline constexpr std::size_t kDefaultVertexCap = 5'000'000;

struct OrbitGraph {
  Pattern source;
  std::vector<Pattern> vertices;                  // BFS discovery order, vertices[0] = source
  std::vector<std::vector<std::uint32_t>> edges;  // adjacency by one legal move
  std::vector<std::uint32_t> distance;            // from source
};

// Compact form used by the exhaustive checks: states are masks over the
// frame of fill(source).
struct OrbitMasks {
  DenseFrame frame;
  std::vector<CellMask> states;          // BFS order
  std::vector<std::uint32_t> distance;   // from states[0]
};

OrbitMasks orbit_masks(const Pattern& p, std::size_t vertex_cap = kDefaultVertexCap);
OrbitGraph orbit_bfs(const Pattern& p, std::size_t vertex_cap = kDefaultVertexCap);
std::size_t orbit_size(const Pattern& p, std::size_t vertex_cap = kDefaultVertexCap);

// Exact diameter of the orbit graph of p (all-sources BFS).
std::uint32_t diameter(const Pattern& p, std::size_t vertex_cap = kDefaultVertexCap);

// All P ⊆ T_n (origin) with |P| = n and fill(P) = T_n, sorted. Throws TooLarge for n > 8.
std::vector<Pattern> enumerate_fill_matrices(int n);
std::vector<CellMask> enumerate_fill_matrix_masks(int n);

// c·(e/2)^n·(n−1)^(n−5/2) with c = (4 + 2·W0(−2e⁻²)) / (e³·√(2π)).
double orbit_count_constant();
double orbit_upper_expression(int n);
std::uint64_t corner_lower_bound(int n);  // 3·n! − 3

struct OrbitSizeReport {
  int n = 0;
  std::uint64_t orbit_size = 0;
  std::uint64_t lower_bound = 0;
  double upper_expression = 0.0;
  bool lower_bound_holds = false;
  std::optional<std::uint32_t> diameter;
};

OrbitSizeReport check_orbit_size_bounds(int n, std::size_t vertex_cap = kDefaultVertexCap,
                                        bool with_diameter = false);

std::string render_census_text(const std::vector<OrbitSizeReport>& rows);

// `steps` uniformly random legal moves; deterministic for a given seed.
Pattern random_walk(const Pattern& p, std::uint64_t steps, std::uint64_t seed);

}  // namespace tsol
