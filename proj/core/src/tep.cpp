#include "tsol/tep.hpp"

#include <algorithm>
#include <deque>
#include <string>
#include <unordered_map>

#include "tsol/filling.hpp"
#include "tsol/lattice.hpp"
#include "tsol/pathfinder.hpp"
#include "text_util.hpp"

namespace tsol {

namespace {

// Positions other than `missing`, in increasing order.
std::array<int, 2> others(int missing) {
  switch (missing) {
    case 0: return {1, 2};
    case 1: return {0, 2};
    default: return {0, 1};
  }
}

int position_in(Point anchor, Point c) {
  const auto d = c - anchor;
  for (int s = 0; s < 3; ++s)
    if (kTriangleShape[s] == d) return s;
  throw InternalError("cell is not in the triangle");
}

std::string witness_text(int a, int b, Symbol va, Symbol vb, int ext) {
  return "positions " + std::to_string(a) + "," + std::to_string(b) + " with values " +
         std::to_string(va) + "," + std::to_string(vb) + " have " + std::to_string(ext) +
         " extensions";
}

}  // namespace

NotTep::NotTep(int a, int b, Symbol va, Symbol vb, int ext)
    : Error("not_tep", "not a TEP family: " + witness_text(a, b, va, vb, ext)),
      pos_a(a),
      pos_b(b),
      val_a(va),
      val_b(vb),
      extensions(ext) {}

TepFamily TepFamily::validate(int alphabet, const std::vector<Triple>& accepted) {
  if (alphabet < 1 || alphabet > 256) throw BadParams("alphabet size must lie in [1, 256]");
  TepFamily fam;
  fam.alphabet_ = alphabet;
  const auto k = static_cast<Symbol>(alphabet);
  for (const auto& t : accepted)
    for (Symbol s : t)
      if (s >= k) throw BadParams("symbol " + std::to_string(s) + " is outside the alphabet");
  fam.accepted_ = accepted;
  std::sort(fam.accepted_.begin(), fam.accepted_.end());
  fam.accepted_.erase(std::unique(fam.accepted_.begin(), fam.accepted_.end()), fam.accepted_.end());

  for (int missing = 0; missing < 3; ++missing) {
    const auto [pa, pb] = others(missing);
    std::vector<int> count(k * k, 0);
    auto& forced = fam.forced_[missing];
    forced.assign(k * k, 0);
    for (const auto& t : fam.accepted_) {
      const Symbol key = t[pa] * k + t[pb];
      ++count[key];
      forced[key] = t[missing];
    }
    for (Symbol key = 0; key < k * k; ++key)
      if (count[key] != 1) throw NotTep(pa, pb, key / k, key % k, count[key]);
  }
  return fam;
}

TepFamily TepFamily::from_rule(std::string_view spec) {
  std::vector<long long> args;
  std::string_view name = spec.substr(0, spec.find(':'));
  for (std::size_t pos = spec.find(':'); pos != std::string_view::npos;) {
    const auto next = spec.find(':', pos + 1);
    long long v = 0;
    if (!detail::parse_int(spec.substr(pos + 1, next - pos - 1), v))
      throw BadParams("bad rule spec \"" + std::string(spec) + "\"");
    args.push_back(v);
    pos = next;
  }
  long long u = 1, v = 1, c = 0, m = 0;
  if (name == "xor" && args.empty()) {
    m = 2;
  } else if (name == "add" && args.size() == 1) {
    m = args[0];
  } else if (name == "affine" && args.size() == 4) {
    u = args[0], v = args[1], c = args[2], m = args[3];
  } else {
    throw BadParams("unknown rule \"" + std::string(spec) +
                    "\" (expected xor, add:<m> or affine:<u>:<v>:<c>:<m>)");
  }
  if (m < 1 || m > 256) throw BadParams("modulus must lie in [1, 256]");
  auto mod = [m](long long x) { return static_cast<Symbol>(((x % m) + m) % m); };
  std::vector<Triple> triples;
  for (long long a = 0; a < m; ++a)
    for (long long b = 0; b < m; ++b)
      triples.push_back({static_cast<Symbol>(a), static_cast<Symbol>(b), mod(u * a + v * b + c)});
  return validate(static_cast<int>(m), triples);
}

bool TepFamily::accepts(const Triple& t) const {
  return std::binary_search(accepted_.begin(), accepted_.end(), t);
}

Symbol TepFamily::forced(int missing, Symbol first, Symbol second) const {
  return forced_[missing][first * static_cast<Symbol>(alphabet_) + second];
}

TepFamily parse_tep_family(std::string_view text) {
  int alphabet = -1;
  std::vector<Triple> triples;
  detail::for_each_line(text, [&](std::size_t lineno, std::string_view line) {
    if (detail::is_blank_or_comment(line)) return;
    auto f = detail::split_spaces(line);
    if (alphabet < 0) {
      if (f.size() != 2 || f[0] != "alphabet" || !detail::parse_int(f[1], alphabet) || alphabet < 1)
        throw ParseError(lineno, "expected \"alphabet <k>\"");
      return;
    }
    Triple t{};
    if (f.size() != 3) throw ParseError(lineno, "expected \"<up> <upright> <right>\"");
    for (int i = 0; i < 3; ++i)
      if (!detail::parse_int(f[i], t[i])) throw ParseError(lineno, "bad symbol");
    triples.push_back(t);
  });
  if (alphabet < 0) throw ParseError(1, "missing \"alphabet <k>\" header");
  return TepFamily::validate(alphabet, triples);
}

std::string render_tep_family(const TepFamily& fam) {
  std::string out = "alphabet " + std::to_string(fam.alphabet()) + "\n";
  for (const auto& t : fam.accepted())
    out += std::to_string(t[0]) + " " + std::to_string(t[1]) + " " + std::to_string(t[2]) + "\n";
  return out;
}

Pattern domain_of(const Assignment& a) {
  std::vector<Point> cells;
  for (const auto& [p, s] : a) cells.push_back(p);
  return Pattern(std::move(cells));
}

Assignment parse_assignment(std::string_view text) {
  Assignment out;
  detail::for_each_line(text, [&](std::size_t lineno, std::string_view line) {
    if (detail::is_blank_or_comment(line)) return;
    auto f = detail::split_spaces(line);
    Coord x = 0, y = 0;
    Symbol s = 0;
    if (f.size() != 3 || !detail::parse_int(f[0], x) || !detail::parse_int(f[1], y) ||
        !detail::parse_int(f[2], s))
      throw ParseError(lineno, "expected \"<x> <y> <symbol>\"");
    if (!out.emplace(Point{x, y}, s).second) throw ParseError(lineno, "duplicate point");
  });
  return out;
}

std::string render_assignment(const Assignment& a) {
  std::string out;
  for (const auto& [p, s] : a)
    out += std::to_string(p.x) + " " + std::to_string(p.y) + " " + std::to_string(s) + "\n";
  return out;
}

Assignment complete(const TepFamily& fam, const Assignment& p, int n) {
  if (n < 1) throw BadSize("n must be positive, got " + std::to_string(n));
  for (const auto& [c, s] : p) {
    if (!in_triangle(c, n, {0, 0})) throw BadParams("assignment leaves T_n");
    if (s >= static_cast<Symbol>(fam.alphabet())) throw BadParams("symbol outside the alphabet");
  }
  Assignment out = p;
  std::deque<Point> pending;
  for (const auto& [c, s] : p) pending.push_back(c);
  while (!pending.empty()) {
    const Point x = pending.front();
    pending.pop_front();
    for (Point off : kNeighbourOffsets) {
      const Point y = x + off;
      auto yit = out.find(y);
      if (yit == out.end()) continue;
      const Point z = third_cell(x, y);
      if (out.count(z)) continue;
      const Point anchor = anchor_of_pair(x, y);
      const int missing = position_in(anchor, z);
      const auto [pa, pb] = others(missing);
      const auto tri = triangle_at(anchor);
      out.emplace(z, fam.forced(missing, out.at(tri[pa]), out.at(tri[pb])));
      pending.push_back(z);
    }
  }
  return out;
}

bool is_valid(const TepFamily& fam, const Assignment& a) {
  for (const auto& [c, s] : a) {
    for (Point off : kTriangleShape) {
      const auto tri = triangle_at(c - off);
      Triple t{};
      bool whole = true;
      for (int i = 0; i < 3; ++i) {
        auto it = a.find(tri[i]);
        if (it == a.end()) {
          whole = false;
          break;
        }
        t[i] = it->second;
      }
      if (whole && !fam.accepts(t)) return false;
    }
  }
  return true;
}

bool is_basis(const Pattern& p, int n) {
  if (n < 1 || p.size() != static_cast<std::size_t>(n)) return false;
  for (Point c : p)
    if (!in_triangle(c, n, {0, 0})) return false;
  return fill(p).size() == static_cast<std::size_t>(n) * (n + 1) / 2;
}

namespace {

void require_bases(const Pattern& p, const Pattern& q, int n) {
  if (fill(p) != fill(q)) throw NotSameTriangle();
  if (!is_basis(p, n)) throw NotABasis("source pattern is not a basis of T_" + std::to_string(n));
  if (!is_basis(q, n)) throw NotABasis("target pattern is not a basis of T_" + std::to_string(n));
}

}  // namespace

Assignment basis_change(const TepFamily& fam, const Pattern& p, const Pattern& q, int n,
                        const Assignment& values) {
  require_bases(p, q, n);
  if (domain_of(values) != p) throw BadParams("assignment domain differs from the source basis");
  const Assignment full = complete(fam, values, n);
  Assignment out;
  for (Point c : q) out.emplace(c, full.at(c));
  return out;
}

CompiledBasisChange compile_basis_change(const TepFamily& fam, const Pattern& p, const Pattern& q,
                                         int n) {
  require_bases(p, q, n);
  CompiledBasisChange out;
  out.alphabet = fam.alphabet();
  out.source_order.assign(p.begin(), p.end());
  out.target_order.assign(q.begin(), q.end());
  const auto k = static_cast<std::uint32_t>(fam.alphabet());

  std::vector<Point> cell_of(out.source_order);
  std::unordered_map<Point, std::uint32_t, PointHash> slot_of;
  for (std::uint32_t i = 0; i < cell_of.size(); ++i) slot_of[cell_of[i]] = i;

  const MoveSequence path = path_between(p, q);
  out.path_moves = path.moves.size();
  for (const Move& m : path.moves) {
    Point partner{};
    for (Point c : triangle_at(m.anchor))
      if (c != m.from && c != m.to) partner = c;
    const std::uint32_t i = slot_of.at(m.from);
    const std::uint32_t j = slot_of.at(partner);
    const int pos_from = position_in(m.anchor, m.from);
    const int pos_partner = position_in(m.anchor, partner);
    const int missing = position_in(m.anchor, m.to);
    BasicPermutation perm{i, j, std::vector<std::uint32_t>(k * k)};
    for (std::uint32_t a = 0; a < k; ++a) {
      for (std::uint32_t b = 0; b < k; ++b) {
        const Symbol first = pos_from < pos_partner ? a : b;
        const Symbol second = pos_from < pos_partner ? b : a;
        perm.table[a * k + b] = fam.forced(missing, first, second) * k + b;
      }
    }
    out.perms.push_back(std::move(perm));
    slot_of.erase(m.from);
    slot_of[m.to] = i;
    cell_of[i] = m.to;
  }

  // Put slot t on the t-th cell of the target order.
  std::vector<std::uint32_t> swap_table(k * k);
  for (std::uint32_t a = 0; a < k; ++a)
    for (std::uint32_t b = 0; b < k; ++b) swap_table[a * k + b] = b * k + a;
  for (std::uint32_t t = 0; t < out.target_order.size(); ++t) {
    const std::uint32_t s = slot_of.at(out.target_order[t]);
    if (s == t) continue;
    out.perms.push_back({t, s, swap_table});
    ++out.reorder_perms;
    std::swap(cell_of[t], cell_of[s]);
    slot_of[cell_of[t]] = t;
    slot_of[cell_of[s]] = s;
  }
  return out;
}

std::vector<Symbol> CompiledBasisChange::apply(std::vector<Symbol> values) const {
  const auto k = static_cast<std::uint32_t>(alphabet);
  for (const auto& perm : perms) {
    const std::uint32_t r = perm.table[values[perm.cell_i] * k + values[perm.cell_j]];
    values[perm.cell_i] = r / k;
    values[perm.cell_j] = r % k;
  }
  return values;
}

}  // namespace tsol
