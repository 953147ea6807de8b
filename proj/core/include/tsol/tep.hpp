#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "tsol/errors.hpp"
#include "tsol/pattern.hpp"

namespace tsol {

using Symbol = std::uint32_t;

// Values at (up, up-right, right) of one triangle.
using Triple = std::array<Symbol, 3>;

class NotTep : public Error {
 public:
  // Positions a < b of T that were assigned; the missing one had `extensions`
  // completions (0 or >= 2) instead of exactly one.
  NotTep(int pos_a, int pos_b, Symbol val_a, Symbol val_b, int extensions);
  int pos_a, pos_b;
  Symbol val_a, val_b;
  int extensions;
};

class TepFamily {
 public:
  // Throws NotTep (with a witness) or BadParams (symbols out of range).
  static TepFamily validate(int alphabet, const std::vector<Triple>& accepted);
  // "xor", "add:<m>" or "affine:<u>:<v>:<c>:<m>" for f(a,b) = u·a + v·b + c mod m,
  // producing the triples (a, b, f(a,b)).
  static TepFamily from_rule(std::string_view spec);

  int alphabet() const { return alphabet_; }
  const std::vector<Triple>& accepted() const { return accepted_; }
  bool accepts(const Triple& t) const;
  // Value forced at position `missing` of T by the other two positions'
  // values, given in increasing position order.
  Symbol forced(int missing, Symbol first, Symbol second) const;

 private:
  int alphabet_ = 0;
  std::vector<Triple> accepted_;
  std::array<std::vector<Symbol>, 3> forced_;  // [missing][first*alphabet+second]
};

// "alphabet <k>" header, then one "<up> <upright> <right>" triple per line.
TepFamily parse_tep_family(std::string_view text);
std::string render_tep_family(const TepFamily& fam);

using Assignment = std::map<Point, Symbol, RenderOrder>;

Pattern domain_of(const Assignment& a);
Assignment parse_assignment(std::string_view text);  // "<x> <y> <symbol>" lines
std::string render_assignment(const Assignment& a);

// Closure on T_n at the origin: any triangle with two assigned cells gets its
// third. pre: domain ⊆ T_n.
Assignment complete(const TepFamily& fam, const Assignment& p, int n);
// Every triangle fully inside the domain is accepted.
bool is_valid(const TepFamily& fam, const Assignment& a);

bool is_basis(const Pattern& p, int n);

Assignment basis_change(const TepFamily& fam, const Pattern& p, const Pattern& q, int n,
                        const Assignment& values);

struct BasicPermutation {
  std::uint32_t cell_i = 0;
  std::uint32_t cell_j = 0;
  // table[a*|Σ|+b] = a'*|Σ|+b' acting on (value_i, value_j).
  std::vector<std::uint32_t> table;
};

struct CompiledBasisChange {
  std::vector<Point> source_order;  // canonical order of P
  std::vector<Point> target_order;  // canonical order of Q
  std::vector<BasicPermutation> perms;
  std::size_t path_moves = 0;
  std::size_t reorder_perms = 0;
  int alphabet = 0;

  // Applies the permutations in sequence to values indexed by source_order;
  // the result is indexed by target_order.
  std::vector<Symbol> apply(std::vector<Symbol> values) const;
};

CompiledBasisChange compile_basis_change(const TepFamily& fam, const Pattern& p,
                                         const Pattern& q, int n);

}  // namespace tsol
