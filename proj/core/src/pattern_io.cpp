#include "tsol/pattern_io.hpp"

#include <charconv>
#include <vector>

#include "tsol/errors.hpp"
#include "text_util.hpp"

namespace tsol {

Pattern parse_pattern(std::string_view text) {
  std::vector<Point> cells;
  Pattern seen;
  detail::for_each_line(text, [&](std::size_t lineno, std::string_view line) {
    if (detail::is_blank_or_comment(line)) return;
    auto fields = detail::split_spaces(line);
    Coord x = 0, y = 0;
    if (fields.size() != 2 || !detail::parse_int(fields[0], x) || !detail::parse_int(fields[1], y))
      throw ParseError(lineno, "expected \"<x> <y>\", got \"" + std::string(line) + "\"");
    if (!seen.insert({x, y})) throw ParseError(lineno, "duplicate point");
  });
  return seen;
}

std::string render_pattern(const Pattern& p) {
  std::string out;
  for (Point c : p) out += std::to_string(c.x) + " " + std::to_string(c.y) + "\n";
  return out;
}

std::string render_ascii(const Pattern& p) {
  if (p.empty()) return "# origin 0 0\n";
  BoundingBox b = p.bounds();
  std::string out = "# origin " + std::to_string(b.lo.x) + " " + std::to_string(b.lo.y) + "\n";
  for (Coord y = b.hi.y; y >= b.lo.y; --y) {
    for (Coord x = b.lo.x; x <= b.hi.x; ++x) out += p.contains({x, y}) ? '#' : '.';
    out += '\n';
  }
  return out;
}

}  // namespace tsol
