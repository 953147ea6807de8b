#include "tsol/pathfinder.hpp"

#include <algorithm>
#include <optional>
#include <string>
#include <unordered_map>
#include <unordered_set>

#include "tsol/errors.hpp"
#include "tsol/filling.hpp"
#include "tsol/normal_form.hpp"
#include "text_util.hpp"

namespace tsol {

namespace {

using CellSet = std::unordered_set<Point, PointHash>;

struct Step {
  Point from;
  Point to;
};
using Plan = std::vector<Step>;

Plan reverse_plan(const Plan& plan) {
  Plan out;
  out.reserve(plan.size());
  for (auto it = plan.rbegin(); it != plan.rend(); ++it) out.push_back({it->to, it->from});
  return out;
}

Plan concat(Plan a, const Plan& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

// Integer affine map p -> M·p + t.
struct Affine {
  Coord m00 = 1, m01 = 0, m10 = 0, m11 = 1;
  Point t{};

  Point operator()(Point p) const { return {m00 * p.x + m01 * p.y + t.x, m10 * p.x + m11 * p.y + t.y}; }
  Plan operator()(const Plan& plan) const {
    Plan out;
    out.reserve(plan.size());
    for (const auto& s : plan) out.push_back({(*this)(s.from), (*this)(s.to)});
    return out;
  }

  static Affine translation(Point t) { return {1, 0, 0, 1, t}; }
  static Affine transpose() { return {0, 1, 1, 0, {}}; }
  // Maps T_n onto itself sending top row -> anti-diagonal -> right column -> top row.
  static Affine rotate(int n) { return {-1, -1, 1, 0, {2 * (n - 1), 0}}; }
  static Affine rotate_inverse(int n) { return {0, 1, -1, -1, {0, 2 * (n - 1)}}; }
};

// Plans are written for a board that holds only the token set V. When a step
// targets a cell occupied by a point outside V, the two points trade roles
// instead of moving: the occupied set is already the intended one.
class Executor {
 public:
  explicit Executor(const Pattern& start) : occupied_(start.begin(), start.end()) {}

  bool occupied(Point p) const { return occupied_.count(p) != 0; }
  const std::vector<Move>& moves() const { return moves_; }
  const CellSet& cells() const { return occupied_; }

  void run(const Plan& plan, CellSet& tokens) {
    for (const auto& s : plan) step(s, tokens);
  }

 private:
  void step(const Step& s, CellSet& tokens) {
    const Point anchor = anchor_of_pair(s.from, s.to);
    Point other{};
    for (Point c : triangle_at(anchor))
      if (c != s.from && c != s.to) other = c;
    if (!tokens.count(s.from) || tokens.count(s.to) || !tokens.count(other))
      throw InternalError("path plan step is not legal for its tokens");
    tokens.erase(s.from);
    tokens.insert(s.to);
    if (occupied(s.to)) return;
    occupied_.erase(s.from);
    occupied_.insert(s.to);
    moves_.push_back({anchor, s.from, s.to});
  }

  CellSet occupied_;
  std::vector<Move> moves_;
};

// ---- plans on T_n at the origin ------------------------------------------

// Top row to anti-diagonal, one stage per row: stage j lowers the cells
// right of column j by one row.
Plan rotation_stage(int n, int j) {
  Plan plan;
  for (int a = n - 1; a >= j + 1; --a) plan.push_back({{a, n - 1 - j}, {a, n - 2 - j}});
  return plan;
}

Plan top_to_diagonal(int n, int stages) {
  Plan plan;
  for (int j = 0; j < stages; ++j) plan = concat(std::move(plan), rotation_stage(n, j));
  return plan;
}

Plan rotation_plan(int n, Edge from, Edge to) {
  if (from == to || n <= 1) return {};
  const Plan h_to_d = top_to_diagonal(n, n - 1);
  const Plan v_to_d = Affine::transpose()(h_to_d);
  switch (from) {
    case Edge::Horizontal:
      return to == Edge::Diagonal ? h_to_d : concat(h_to_d, reverse_plan(v_to_d));
    case Edge::Vertical:
      return to == Edge::Diagonal ? v_to_d : concat(v_to_d, reverse_plan(h_to_d));
    case Edge::Diagonal:
      return reverse_plan(to == Edge::Horizontal ? h_to_d : v_to_d);
  }
  return {};
}

// Line on the top row of T_n, extra token at (c, n). Ends on the top row of
// T_{n+1} anchored at (-1, 0).
Plan extension_plan(int n, Coord c) {
  Plan plan;
  for (Coord a = c + 1; a <= n - 1; ++a) plan.push_back({{a, n - 1}, {a, n}});
  for (Coord a = c; a >= 0; --a) plan.push_back({{a, n - 1}, {a - 1, n}});
  return plan;
}

// ---- triangle bookkeeping ------------------------------------------------

struct Piece {
  Point anchor;
  int n = 1;
  Edge line = Edge::Horizontal;
};

bool inside(const Piece& t, Point p) { return in_triangle(p, t.n, t.anchor); }

bool touches(const Piece& t, Point p) {
  if (inside(t, p)) return false;
  for (Point q : neighbourhood(p))
    if (inside(t, q)) return true;
  return false;
}

bool overlaps_or_touches(const Piece& a, const Piece& b) {
  for (Point p : size_n_triangle(b.n, b.anchor))
    if (inside(a, p) || touches(a, p)) return true;
  return false;
}

// Which side of t the neighbouring cell p lies on, as the edge facing it.
Edge side_of(const Piece& t, Point p) {
  Point q = p - t.anchor;
  if (q.y == t.n) return Edge::Horizontal;
  if (q.x == t.n) return Edge::Vertical;
  return Edge::Diagonal;
}

Piece grown(const Piece& t, Point p) {
  switch (side_of(t, p)) {
    case Edge::Horizontal: return {t.anchor + Point{-1, 0}, t.n + 1, Edge::Horizontal};
    case Edge::Vertical: return {t.anchor + Point{0, -1}, t.n + 1, Edge::Vertical};
    case Edge::Diagonal: return {t.anchor + Point{-1, -1}, t.n + 1, Edge::Diagonal};
  }
  return t;
}

Affine edge_frame(Edge e, int n) {
  switch (e) {
    case Edge::Horizontal: return {};
    case Edge::Vertical: return Affine::transpose();
    case Edge::Diagonal: return Affine::rotate(n);
  }
  return {};
}

Affine edge_frame_inverse(Edge e, int n) {
  return e == Edge::Diagonal ? Affine::rotate_inverse(n) : edge_frame(e, n);
}

CellSet line_cells(const Piece& t) {
  Pattern e = edge_of_triangle(t.n, t.anchor, t.line);
  return CellSet(e.begin(), e.end());
}

class Synthesizer {
 public:
  explicit Synthesizer(const Pattern& p) : ex_(p) {}

  MoveSequence run(const Pattern& start) {
    form_lines();
    for (auto& t : pieces_) rotate(t, Edge::Horizontal);
    for (const auto& t : pieces_) normalize_excess(t.anchor, t.n);
    return {start, ex_.moves()};
  }

  const Executor& executor() const { return ex_; }

 private:
  void rotate(Piece& t, Edge to) {
    if (t.line == to) return;
    CellSet tokens = line_cells(t);
    ex_.run(Affine::translation(t.anchor)(rotation_plan(t.n, t.line, to)), tokens);
    t.line = to;
  }

  // Absorbs the occupied neighbour p into t's line; t becomes one size larger.
  void extend(Piece& t, Point p) {
    const Edge side = side_of(t, p);
    rotate(t, side);
    const Point local = edge_frame_inverse(side, t.n)(p - t.anchor);
    Affine to_world = edge_frame(side, t.n);
    to_world.t = to_world.t + t.anchor;
    CellSet tokens = line_cells(t);
    tokens.insert(p);
    ex_.run(to_world(extension_plan(t.n, local.x)), tokens);
    t = grown(t, p);
  }

  bool in_some_piece(Point p) const {
    return std::any_of(pieces_.begin(), pieces_.end(), [&](const Piece& t) { return inside(t, p); });
  }

  // Greedy pour of the cells of `line` into cur; returns the absorbed cells
  // in order, or nothing if some cell never becomes adjacent.
  static std::optional<std::vector<Point>> pour(Piece cur, Pattern line, Piece* result) {
    std::vector<Point> order;
    while (true) {
      Pattern rest;
      for (Point q : line)
        if (!inside(cur, q)) rest.insert(q);
      if (rest.empty()) break;
      auto next = std::find_if(rest.begin(), rest.end(), [&](Point q) { return touches(cur, q); });
      if (next == rest.end()) return std::nullopt;
      order.push_back(*next);
      cur = grown(cur, *next);
      line = rest;
    }
    *result = cur;
    return order;
  }

  void form_lines() {
    while (true) {
      std::vector<Point> outside;
      for (Point p : Pattern(std::vector<Point>(ex_.cells().begin(), ex_.cells().end())))
        if (!in_some_piece(p)) outside.push_back(p);
      if (outside.empty()) return;

      // Prefer a point that touches a piece; the largest such piece takes it.
      std::optional<Point> x;
      std::size_t host = 0;
      for (Point p : outside) {
        for (std::size_t i = 0; i < pieces_.size(); ++i) {
          if (!touches(pieces_[i], p)) continue;
          if (!x || (*x == p && (pieces_[i].n > pieces_[host].n ||
                                 (pieces_[i].n == pieces_[host].n &&
                                  RenderOrder{}(pieces_[i].anchor, pieces_[host].anchor))))) {
            x = p;
            host = i;
          }
        }
        if (x) break;
      }
      if (!x) {
        pieces_.push_back({outside.front(), 1, Edge::Horizontal});
        continue;
      }
      merge_into(host, *x);
    }
  }

  void merge_into(std::size_t host, Point x) {
    // Plan the cascade on triangles only.
    Piece cur = grown(pieces_[host], x);
    std::vector<std::size_t> rest;
    for (std::size_t i = 0; i < pieces_.size(); ++i)
      if (i != host) rest.push_back(i);
    std::sort(rest.begin(), rest.end(), [&](std::size_t a, std::size_t b) {
      return RenderOrder{}(pieces_[a].anchor, pieces_[b].anchor);
    });
    std::vector<bool> merged(pieces_.size(), false);
    std::vector<Point> absorbed;
    for (bool progress = true; progress;) {
      progress = false;
      for (std::size_t i : rest) {
        if (merged[i] || !overlaps_or_touches(cur, pieces_[i])) continue;
        Piece& b = pieces_[i];
        // Keep the current line if it pours; rotating costs moves.
        std::vector<Edge> order{b.line};
        for (Edge e : {Edge::Horizontal, Edge::Vertical, Edge::Diagonal})
          if (e != b.line) order.push_back(e);
        bool done = false;
        for (Edge e : order) {
          Piece next;
          auto seq = pour(cur, edge_of_triangle(b.n, b.anchor, e), &next);
          if (!seq) continue;
          // Rotations happen before anything merges, while pieces are apart.
          rotate(b, e);
          absorbed.insert(absorbed.end(), seq->begin(), seq->end());
          cur = next;
          done = true;
          break;
        }
        if (!done) throw InternalError("no edge of a touching triangle can be merged");
        merged[i] = true;
        progress = true;
      }
    }

    Piece t = pieces_[host];
    extend(t, x);
    for (Point p : absorbed) extend(t, p);
    if (t.anchor != cur.anchor || t.n != cur.n) throw InternalError("merge cascade diverged");

    std::vector<Piece> kept;
    for (std::size_t i = 0; i < pieces_.size(); ++i)
      if (i != host && !merged[i]) kept.push_back(pieces_[i]);
    kept.push_back(t);
    pieces_ = std::move(kept);
  }

  // ---- excess below a top-row line -----------------------------------

  // Frame of one level: line on the top row of T_n at v (world coordinates).
  struct Level {
    Point v;
    int n;
    Point w(Coord a, Coord b) const { return v + Point{a, b}; }
  };

  CellSet level_line(const Level& L) const {
    CellSet s;
    for (int a = 0; a < L.n; ++a) s.insert(L.w(a, L.n - 1));
    return s;
  }

  bool slot_full(const Level& L, Coord a) const { return ex_.occupied(L.w(a, L.n - 2)); }

  void push_right(const Level& L, Coord c) {
    const Coord y = L.n - 2;
    CellSet tokens = level_line(L);
    tokens.insert(L.w(c, y));
    ex_.run({{L.w(c, y + 1), L.w(c + 1, y)}, {L.w(c, y), L.w(c, y + 1)}}, tokens);
  }

  void push_left(const Level& L, Coord c) {  // from c+1 to c
    const Coord y = L.n - 2;
    CellSet tokens = level_line(L);
    tokens.insert(L.w(c + 1, y));
    ex_.run({{L.w(c, y + 1), L.w(c, y)}, {L.w(c + 1, y), L.w(c, y + 1)}}, tokens);
  }

  // Brings the point q (local, below the first row under the line) up to
  // column qx + qy - n + 2 of that row.
  void lift(const Level& L, Point q) {
    const int n = L.n;
    const int j0 = n - 2 - static_cast<int>(q.y);
    const Affine to_world = Affine::translation(L.v);
    CellSet tokens = level_line(L);
    ex_.run(to_world(top_to_diagonal(n, j0)), tokens);
    tokens.insert(L.w(q.x, q.y));
    Coord c = q.x;
    for (int j = j0; j >= 1; --j) {
      const Coord y = n - 1 - j;
      Plan stage;
      for (Coord a = j; a <= c - 1; ++a) stage.push_back({{a, y}, {a, y + 1}});
      stage.push_back({{c, y - 1}, {c - 1, y}});
      for (Coord a = c; a <= n - 1; ++a) stage.push_back({{a, y}, {a, y + 1}});
      ex_.run(to_world(stage), tokens);
      --c;
    }
  }

  void normalize_excess(Point v, int n) {
    for (Level L{v, n}; L.n >= 2; L = Level{L.v + Point{1, 0}, L.n - 1}) {
      const Coord y = L.n - 2;
      std::vector<Point> below;  // local cells under the first row
      int k = 0;
      for (Point c : size_n_triangle(L.n, {0, 0})) {
        if (c.y >= L.n - 1 || !ex_.occupied(L.w(c.x, c.y))) continue;
        ++k;
      }
      if (k == 0) return;
      const int want = std::min(k, L.n - 1);
      auto row_count = [&] {
        int r = 0;
        for (Coord a = 1; a <= L.n - 1; ++a) r += slot_full(L, a) ? 1 : 0;
        return r;
      };
      for (int guard = 0; row_count() < want; ++guard) {
        if (guard > L.n) throw InternalError("excess fetch did not converge");
        std::optional<Point> q;
        for (Point c : size_n_triangle(L.n, {0, 0}))
          if (c.y < y && ex_.occupied(L.w(c.x, c.y))) {
            q = c;
            break;
          }
        if (!q) throw InternalError("missing excess point below the first row");
        const Coord land = q->x + q->y - L.n + 2;
        if (slot_full(L, land)) make_room(L, land);
        lift(L, *q);
      }
      compact_right(L);
      if (k <= L.n - 1) return;
    }
  }

  // Empties slot `at` by shifting its run toward the nearest empty slot.
  void make_room(const Level& L, Coord at) {
    for (Coord d = 1; d < L.n; ++d) {
      if (at + d <= L.n - 1 && !slot_full(L, at + d)) {
        for (Coord c = at + d - 1; c >= at; --c) push_right(L, c);
        return;
      }
      if (at - d >= 1 && !slot_full(L, at - d)) {
        for (Coord c = at - d; c <= at - 1; ++c) push_left(L, c);
        return;
      }
    }
    throw InternalError("no empty slot in the first row");
  }

  void compact_right(const Level& L) {
    Coord target = L.n - 1;
    for (Coord a = L.n - 1; a >= 1; --a) {
      if (!slot_full(L, a)) continue;
      for (Coord c = a; c < target; ++c) push_right(L, c);
      --target;
    }
  }

  Executor ex_;
  std::vector<Piece> pieces_;
};

std::uint64_t cell_key(Point c) {
  std::uint64_t z = PointHash{}(c) + 0x9E3779B97F4A7C15ull;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

// Cuts every detour that returns to an earlier state. States are keyed by a
// Zobrist hash; the result is replayed and discarded on a (theoretical) collision.
MoveSequence drop_cycles(const MoveSequence& seq) {
  std::uint64_t h = 0;
  for (Point c : seq.start) h ^= cell_key(c);
  std::vector<Move> kept;
  std::vector<std::uint64_t> trail{h};
  std::unordered_map<std::uint64_t, std::size_t> at{{h, 0}};
  for (const Move& m : seq.moves) {
    h ^= cell_key(m.from) ^ cell_key(m.to);
    if (auto it = at.find(h); it != at.end()) {
      const std::size_t j = it->second;
      for (std::size_t i = j + 1; i < trail.size(); ++i) at.erase(trail[i]);
      trail.resize(j + 1);
      kept.resize(j);
      continue;
    }
    kept.push_back(m);
    trail.push_back(h);
    at.emplace(h, kept.size());
  }
  if (kept.size() == seq.moves.size()) return seq;
  MoveSequence out{seq.start, std::move(kept)};
  try {
    if (replay(out) == replay(seq)) return out;
  } catch (const IllegalMove&) {
  }
  return seq;
}

}  // namespace

MoveSequence edge_rotation(int n, Point v, Edge from, Edge to) {
  if (n < 1) throw BadSize("triangle size must be positive, got " + std::to_string(n));
  MoveSequence seq{edge_of_triangle(n, v, from), {}};
  Executor ex(seq.start);
  Pattern start = seq.start;
  CellSet tokens(start.begin(), start.end());
  ex.run(Affine::translation(v)(rotation_plan(n, from, to)), tokens);
  seq.moves = ex.moves();
  return seq;
}

MoveSequence to_normal_form(const Pattern& p) {
  Synthesizer s(p);
  MoveSequence seq = s.run(p);
  const auto& cells = s.executor().cells();
  if (Pattern(std::vector<Point>(cells.begin(), cells.end())) != realize(normal_form(p)))
    throw InternalError("path synthesis missed the normal form");
  return drop_cycles(seq);
}

Pattern replay(const MoveSequence& seq) {
  Pattern cur = seq.start;
  for (std::size_t i = 0; i < seq.moves.size(); ++i) {
    if (!is_legal(cur, seq.moves[i]))
      throw IllegalMove("move " + std::to_string(i) + " is illegal", i);
    cur.erase(seq.moves[i].from);
    cur.insert(seq.moves[i].to);
  }
  return cur;
}

MoveSequence reversed(const MoveSequence& seq) {
  MoveSequence out{replay(seq), {}};
  for (auto it = seq.moves.rbegin(); it != seq.moves.rend(); ++it) out.moves.push_back(reversed(*it));
  return out;
}

MoveSequence path_between(const Pattern& p, const Pattern& q) {
  if (!same_orbit(p, q)) throw NotSameOrbit();
  MoveSequence out = to_normal_form(p);
  MoveSequence back = to_normal_form(q);
  for (auto it = back.moves.rbegin(); it != back.moves.rend(); ++it)
    out.moves.push_back(reversed(*it));
  return drop_cycles(out);
}

std::string render_move_sequence(const MoveSequence& seq) {
  std::string out;
  for (Point c : seq.start) out += std::to_string(c.x) + " " + std::to_string(c.y) + "\n";
  for (const Move& m : seq.moves) {
    out += "move";
    for (Point c : {m.anchor, m.from, m.to}) out += " " + std::to_string(c.x) + " " + std::to_string(c.y);
    out += "\n";
  }
  return out;
}

MoveSequence parse_move_sequence(std::string_view text) {
  MoveSequence seq;
  detail::for_each_line(text, [&](std::size_t lineno, std::string_view line) {
    if (detail::is_blank_or_comment(line)) return;
    auto f = detail::split_spaces(line);
    if (f[0] == "move") {
      Coord v[6];
      if (f.size() != 7) throw ParseError(lineno, "expected \"move <vx> <vy> <fx> <fy> <tx> <ty>\"");
      for (int i = 0; i < 6; ++i)
        if (!detail::parse_int(f[i + 1], v[i])) throw ParseError(lineno, "bad coordinate");
      seq.moves.push_back({{v[0], v[1]}, {v[2], v[3]}, {v[4], v[5]}});
      return;
    }
    if (!seq.moves.empty()) throw ParseError(lineno, "start point after the first move");
    Coord x = 0, y = 0;
    if (f.size() != 2 || !detail::parse_int(f[0], x) || !detail::parse_int(f[1], y))
      throw ParseError(lineno, "expected \"<x> <y>\"");
    if (!seq.start.insert({x, y})) throw ParseError(lineno, "duplicate point");
  });
  return seq;
}

}  // namespace tsol
