#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "tsol/filling.hpp"
#include "tsol/pattern.hpp"

namespace tsol {

struct NormalFormPart {
  Point anchor;  // v: the part is v + P_{n,k}
  int n = 0;
  int k = 0;
  friend bool operator==(const NormalFormPart&, const NormalFormPart&) = default;
};

struct NormalForm {
  std::vector<NormalFormPart> parts;  // sorted by (anchor.y desc, anchor.x asc)
  friend bool operator==(const NormalForm&, const NormalForm&) = default;
};

// Top edge of v+T_n, then k cells of the rows below it, each row scanned
// right to left, topmost row first. Throws BadParams unless 0 <= k <= n(n-1)/2.
Pattern p_nk(int n, int k, Point v);
// The i-th excess slot of P_{n,k} at the origin (0-based).
Point excess_slot(int n, int i);

NormalForm normal_form(const Pattern& p, WorkCounter* counter = nullptr);
Pattern realize(const NormalForm& nf);
bool same_orbit(const Pattern& p, const Pattern& q);

// Text form: one "part <x> <y> n=<n> k=<k>" line per part, where (x, y) is
// the leftmost cell of the part's line.
std::string render_normal_form(const NormalForm& nf);
NormalForm parse_normal_form(std::string_view text);

}  // namespace tsol
