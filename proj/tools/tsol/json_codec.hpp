#pragma once

#include <json.hpp>

#include "tsol/tsol.hpp"

namespace tsol::codec {

using nlohmann::json;

json to_json(Point p);
json to_json(const Pattern& p);
json to_json(const Move& m);
json to_json(const NormalForm& nf);
json to_json(const MoveSequence& seq);
json to_json(const Assignment& a);
json to_json(const std::vector<OrbitSizeReport>& census);

// Decoders throw BadParams on shape errors.
Point point_from_json(const json& j);
Pattern pattern_from_json(const json& j);
Move move_from_json(const json& j);
NormalForm normal_form_from_json(const json& j);
MoveSequence move_sequence_from_json(const json& j);
Assignment assignment_from_json(const json& j);

}  // namespace tsol::codec
