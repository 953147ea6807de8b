#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "tsol/lattice.hpp"
#include "tsol/pattern.hpp"

namespace tsol {

struct MoveSequence {
  Pattern start;
  std::vector<Move> moves;
  friend bool operator==(const MoveSequence&, const MoveSequence&) = default;
};

// Moves one edge of v+T_n onto another without leaving v+T_n.
MoveSequence edge_rotation(int n, Point v, Edge from, Edge to);

// A legal sequence from p to realize(normal_form(p)).
MoveSequence to_normal_form(const Pattern& p);

// to_normal_form(p) followed by the reversal of to_normal_form(q).
// Throws NotSameOrbit if the normal forms differ.
MoveSequence path_between(const Pattern& p, const Pattern& q);

// Applies the moves in order. Throws IllegalMove carrying the move index.
Pattern replay(const MoveSequence& seq);

// The sequence that walks back from replay(seq) to seq.start.
MoveSequence reversed(const MoveSequence& seq);

std::string render_move_sequence(const MoveSequence& seq);
MoveSequence parse_move_sequence(std::string_view text);

}  // namespace tsol
