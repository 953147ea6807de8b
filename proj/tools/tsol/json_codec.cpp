#include "json_codec.hpp"

#include <cmath>
#include <type_traits>

namespace tsol::codec {

namespace {

const json& field(const json& j, const char* name) {
  if (!j.is_object() || !j.contains(name))
    throw BadParams(std::string("missing field \"") + name + "\"");
  return j.at(name);
}

template <class Int>
Int integer(const json& j, const char* what) {
  if (!j.is_number_integer()) throw BadParams(std::string(what) + " must be an integer");
  if constexpr (std::is_unsigned_v<Int>)
    if (j.get<long long>() < 0) throw BadParams(std::string(what) + " must be nonnegative");
  return j.get<Int>();
}

}  // namespace

json to_json(Point p) { return json::array({p.x, p.y}); }

json to_json(const Pattern& p) {
  json cells = json::array();
  for (Point c : p) cells.push_back(to_json(c));
  return {{"cells", cells}};
}

json to_json(const Move& m) {
  return {{"anchor", to_json(m.anchor)}, {"from", to_json(m.from)}, {"to", to_json(m.to)}};
}

json to_json(const NormalForm& nf) {
  json parts = json::array();
  for (const auto& part : nf.parts)
    parts.push_back({{"v", to_json(part.anchor)}, {"n", part.n}, {"k", part.k}});
  return {{"parts", parts}};
}

json to_json(const MoveSequence& seq) {
  json moves = json::array();
  for (const auto& m : seq.moves) moves.push_back(to_json(m));
  return {{"start", to_json(seq.start)}, {"moves", moves}};
}

json to_json(const Assignment& a) {
  json out = json::array();
  for (const auto& [p, s] : a) out.push_back(json::array({p.x, p.y, s}));
  return out;
}

json to_json(const std::vector<OrbitSizeReport>& census) {
  json rows = json::array();
  for (const auto& r : census) {
    json row = {{"n", r.n},
                {"orbit_size", r.orbit_size},
                {"lower_bound_3nfact", r.lower_bound},
                {"lower_bound_holds", r.lower_bound_holds}};
    row["upper_bound_expr"] = std::isfinite(r.upper_expression) ? json(r.upper_expression) : json();
    row["diameter"] = r.diameter ? json(*r.diameter) : json();
    rows.push_back(row);
  }
  return {{"constant_c", orbit_count_constant()}, {"rows", rows}};
}

Point point_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2) throw BadParams("a point is an array [x, y]");
  return {integer<Coord>(j[0], "coordinate"), integer<Coord>(j[1], "coordinate")};
}

Pattern pattern_from_json(const json& j) {
  const json& cells = field(j, "cells");
  if (!cells.is_array()) throw BadParams("\"cells\" must be an array");
  Pattern p;
  for (const auto& c : cells)
    if (!p.insert(point_from_json(c))) throw BadParams("duplicate cell in pattern");
  return p;
}

Move move_from_json(const json& j) {
  return {point_from_json(field(j, "anchor")), point_from_json(field(j, "from")),
          point_from_json(field(j, "to"))};
}

NormalForm normal_form_from_json(const json& j) {
  NormalForm nf;
  for (const auto& part : field(j, "parts"))
    nf.parts.push_back({point_from_json(field(part, "v")), integer<int>(field(part, "n"), "n"),
                        integer<int>(field(part, "k"), "k")});
  return nf;
}

MoveSequence move_sequence_from_json(const json& j) {
  MoveSequence seq{pattern_from_json(field(j, "start")), {}};
  for (const auto& m : field(j, "moves")) seq.moves.push_back(move_from_json(m));
  return seq;
}

Assignment assignment_from_json(const json& j) {
  if (!j.is_array()) throw BadParams("an assignment is an array of [x, y, symbol]");
  Assignment a;
  for (const auto& e : j) {
    if (!e.is_array() || e.size() != 3) throw BadParams("an assignment entry is [x, y, symbol]");
    Point p{integer<Coord>(e[0], "coordinate"), integer<Coord>(e[1], "coordinate")};
    if (!a.emplace(p, integer<Symbol>(e[2], "symbol")).second)
      throw BadParams("duplicate cell in assignment");
  }
  return a;
}

}  // namespace tsol::codec
