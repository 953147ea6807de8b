#pragma once

#include <array>
#include <optional>
#include <string_view>
#include <vector>

#include "tsol/pattern.hpp"

namespace tsol {

// Offsets of the triangle shape, in the fixed order up, up-right, right.
inline constexpr std::array<Point, 3> kTriangleShape{{{0, 1}, {1, 1}, {1, 0}}};

inline constexpr std::array<Point, 6> kNeighbourOffsets{
    {{1, 0}, {-1, 0}, {0, 1}, {0, -1}, {1, -1}, {-1, 1}}};

struct Move {
  Point anchor;
  Point from;
  Point to;
  friend bool operator==(const Move&, const Move&) = default;
};

// The move that undoes m.
constexpr Move reversed(const Move& m) { return {m.anchor, m.to, m.from}; }

enum class Edge { Horizontal, Vertical, Diagonal };

const char* edge_name(Edge e);
std::optional<Edge> parse_edge(std::string_view s);

std::array<Point, 3> triangle_at(Point v);
std::array<Point, 6> neighbourhood(Point x);
bool are_neighbours(Point a, Point b);

// The unique anchor v with both a and b in v+T. pre: are_neighbours(a, b).
Point anchor_of_pair(Point a, Point b);
// The third cell of the triangle through the neighbouring cells a and b.
Point third_cell(Point a, Point b);

std::vector<Move> legal_moves(const Pattern& p);
bool is_legal(const Pattern& p, const Move& m);
Pattern apply_move(const Pattern& p, const Move& m);

Pattern size_n_triangle(int n, Point v);
// (top row, right column, anti-diagonal) of v+T_n.
std::array<Pattern, 3> edges_of_triangle(int n, Point v);
Pattern edge_of_triangle(int n, Point v, Edge e);
bool in_triangle(Point p, int n, Point v);

}  // namespace tsol
