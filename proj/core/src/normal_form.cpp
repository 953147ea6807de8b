#include "tsol/normal_form.hpp"

#include <algorithm>
#include <string>

#include "tsol/errors.hpp"
#include "tsol/lattice.hpp"
#include "text_util.hpp"

namespace tsol {

Point excess_slot(int n, int i) {
  // Row b = n-2 holds n-1 slots, row b = n-3 holds n-2, and so on.
  int b = n - 2;
  int row_len = n - 1;
  while (i >= row_len) {
    i -= row_len;
    --row_len;
    --b;
  }
  return {n - 1 - i, b};
}

Pattern p_nk(int n, int k, Point v) {
  if (n < 1) throw BadSize("n must be positive, got " + std::to_string(n));
  const long long max_k = static_cast<long long>(n) * (n - 1) / 2;
  if (k < 0 || k > max_k)
    throw BadParams("k must lie in [0, " + std::to_string(max_k) + "], got " + std::to_string(k));
  std::vector<Point> cells;
  for (int a = 0; a < n; ++a) cells.push_back(v + Point{a, n - 1});
  for (int i = 0; i < k; ++i) cells.push_back(v + excess_slot(n, i));
  return Pattern(std::move(cells));
}

NormalForm normal_form(const Pattern& p, WorkCounter* counter) {
  NormalForm nf;
  const auto d = decompose(fill(p, FillSchedule::Queue, counter), counter);
  std::vector<int> inside(d.parts.size(), 0);
  std::uint64_t visits = 0;
  for (Point c : p) {
    for (std::size_t i = 0; i < d.parts.size(); ++i) {
      ++visits;
      if (in_triangle(c, d.parts[i].size, d.parts[i].anchor)) {
        ++inside[i];
        break;
      }
    }
  }
  for (std::size_t i = 0; i < d.parts.size(); ++i)
    nf.parts.push_back({d.parts[i].anchor, d.parts[i].size, inside[i] - d.parts[i].size});
  if (counter) counter->visits += visits;
  return nf;
}

Pattern realize(const NormalForm& nf) {
  Pattern out;
  for (const auto& part : nf.parts) out = out.united(p_nk(part.n, part.k, part.anchor));
  return out;
}

bool same_orbit(const Pattern& p, const Pattern& q) {
  return p.size() == q.size() && normal_form(p) == normal_form(q);
}

std::string render_normal_form(const NormalForm& nf) {
  std::string out;
  for (const auto& part : nf.parts) {
    Point left = part.anchor + Point{0, part.n - 1};
    out += "part " + std::to_string(left.x) + " " + std::to_string(left.y) +
           " n=" + std::to_string(part.n) + " k=" + std::to_string(part.k) + "\n";
  }
  return out;
}

NormalForm parse_normal_form(std::string_view text) {
  NormalForm nf;
  detail::for_each_line(text, [&](std::size_t lineno, std::string_view line) {
    if (detail::is_blank_or_comment(line)) return;
    auto f = detail::split_spaces(line);
    Coord x = 0, y = 0;
    int n = 0, k = 0;
    bool ok = f.size() == 5 && f[0] == "part" && detail::parse_int(f[1], x) &&
              detail::parse_int(f[2], y) && f[3].substr(0, 2) == "n=" &&
              detail::parse_int(f[3].substr(2), n) && f[4].substr(0, 2) == "k=" &&
              detail::parse_int(f[4].substr(2), k) && n >= 1 && k >= 0 &&
              static_cast<long long>(k) <= static_cast<long long>(n) * (n - 1) / 2;
    if (!ok) throw ParseError(lineno, "expected \"part <x> <y> n=<n> k=<k>\"");
    nf.parts.push_back({Point{x, y - (n - 1)}, n, k});
  });
  std::sort(nf.parts.begin(), nf.parts.end(), [](const auto& a, const auto& b) {
    if (a.anchor != b.anchor) return RenderOrder{}(a.anchor, b.anchor);
    return a.n < b.n;
  });
  return nf;
}

}  // namespace tsol
