#pragma once

#include <string>
#include <string_view>

#include "tsol/pattern.hpp"

namespace tsol {

// `.pts`: one "<x> <y>" per line, '#' comments and blank lines ignored.
Pattern parse_pattern(std::string_view text);
std::string render_pattern(const Pattern& p);

// '#'/'.' grid over the tight bounding box, headed by "# origin <x> <y>"
// (the lower-left corner). Top row first.
std::string render_ascii(const Pattern& p);

}  // namespace tsol
