#include "tsol/lattice.hpp"

#include <algorithm>
#include <string>

#include "tsol/errors.hpp"

namespace tsol {

namespace {

std::string show(Point p) { return "(" + std::to_string(p.x) + "," + std::to_string(p.y) + ")"; }

}  // namespace

const char* edge_name(Edge e) {
  switch (e) {
    case Edge::Horizontal: return "horizontal";
    case Edge::Vertical: return "vertical";
    case Edge::Diagonal: return "diagonal";
  }
  return "?";
}

std::optional<Edge> parse_edge(std::string_view s) {
  if (s == "horizontal" || s == "h") return Edge::Horizontal;
  if (s == "vertical" || s == "v") return Edge::Vertical;
  if (s == "diagonal" || s == "d") return Edge::Diagonal;
  return std::nullopt;
}

std::array<Point, 3> triangle_at(Point v) {
  return {v + kTriangleShape[0], v + kTriangleShape[1], v + kTriangleShape[2]};
}

std::array<Point, 6> neighbourhood(Point x) {
  std::array<Point, 6> out;
  for (std::size_t i = 0; i < 6; ++i) out[i] = x + kNeighbourOffsets[i];
  return out;
}

bool are_neighbours(Point a, Point b) {
  Point d = b - a;
  return std::find(kNeighbourOffsets.begin(), kNeighbourOffsets.end(), d) !=
         kNeighbourOffsets.end();
}

Point anchor_of_pair(Point a, Point b) {
  if (!are_neighbours(a, b)) throw BadParams(show(a) + " and " + show(b) + " are not neighbours");
  // Normalise so that b - a is one of (1,0), (0,1), (1,-1).
  if (b.x < a.x || (b.x == a.x && b.y < a.y)) std::swap(a, b);
  Point d = b - a;
  if (d == Point{1, 0}) return a - Point{0, 1};
  if (d == Point{0, 1}) return a - Point{1, 0};
  return a - Point{0, 1};  // d == (1,-1): a is up, b is right
}

Point third_cell(Point a, Point b) {
  for (Point c : triangle_at(anchor_of_pair(a, b)))
    if (c != a && c != b) return c;
  throw InternalError("degenerate triangle");
}

std::vector<Move> legal_moves(const Pattern& p) {
  // Candidate anchors: every v with some cell of p in v+T.
  std::vector<Point> anchors;
  anchors.reserve(3 * p.size());
  for (Point c : p)
    for (Point off : kTriangleShape) anchors.push_back(c - off);
  std::sort(anchors.begin(), anchors.end(), RenderOrder{});
  anchors.erase(std::unique(anchors.begin(), anchors.end()), anchors.end());

  std::vector<Move> out;
  for (Point v : anchors) {
    auto tri = triangle_at(v);
    int occupied = 0;
    Point empty{};
    for (Point c : tri) {
      if (p.contains(c)) ++occupied;
      else empty = c;
    }
    if (occupied != 2) continue;
    for (Point c : tri)
      if (c != empty) out.push_back({v, c, empty});
  }
  return out;
}

bool is_legal(const Pattern& p, const Move& m) {
  auto tri = triangle_at(m.anchor);
  auto in_tri = [&](Point c) { return std::find(tri.begin(), tri.end(), c) != tri.end(); };
  if (!in_tri(m.from) || !in_tri(m.to) || m.from == m.to) return false;
  if (!p.contains(m.from) || p.contains(m.to)) return false;
  int occupied = 0;
  for (Point c : tri) occupied += p.contains(c) ? 1 : 0;
  return occupied == 2;
}

Pattern apply_move(const Pattern& p, const Move& m) {
  if (!is_legal(p, m))
    throw IllegalMove("illegal move " + show(m.from) + "->" + show(m.to) + " at anchor " +
                      show(m.anchor));
  Pattern out = p;
  out.erase(m.from);
  out.insert(m.to);
  return out;
}

bool in_triangle(Point p, int n, Point v) {
  Point q = p - v;
  return q.x >= 0 && q.y >= 0 && q.x < n && q.y < n && q.x + q.y >= n - 1;
}

Pattern size_n_triangle(int n, Point v) {
  if (n < 1) throw BadSize("triangle size must be positive, got " + std::to_string(n));
  std::vector<Point> cells;
  cells.reserve(static_cast<std::size_t>(n) * (n + 1) / 2);
  for (int b = 0; b < n; ++b)
    for (int a = n - 1 - b; a < n; ++a) cells.push_back(v + Point{a, b});
  return Pattern(std::move(cells));
}

Pattern edge_of_triangle(int n, Point v, Edge e) {
  if (n < 1) throw BadSize("triangle size must be positive, got " + std::to_string(n));
  std::vector<Point> cells;
  for (int c = 0; c < n; ++c) {
    switch (e) {
      case Edge::Horizontal: cells.push_back(v + Point{c, n - 1}); break;
      case Edge::Vertical: cells.push_back(v + Point{n - 1, c}); break;
      case Edge::Diagonal: cells.push_back(v + Point{c, n - 1 - c}); break;
    }
  }
  return Pattern(std::move(cells));
}

std::array<Pattern, 3> edges_of_triangle(int n, Point v) {
  return {edge_of_triangle(n, v, Edge::Horizontal), edge_of_triangle(n, v, Edge::Vertical),
          edge_of_triangle(n, v, Edge::Diagonal)};
}

}  // namespace tsol
