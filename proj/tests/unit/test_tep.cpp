#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "tsol/tsol.hpp"

using namespace tsol;

namespace {

std::vector<Triple> triples_of(int m, Symbol (*f)(Symbol, Symbol, int)) {
  std::vector<Triple> out;
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) out.push_back({Symbol(a), Symbol(b), f(a, b, m)});
  return out;
}

oracle::Values to_values(const Assignment& a) {
  oracle::Values v;
  for (auto& [p, s] : a) v[{p.x, p.y}] = s;
  return v;
}

oracle::Values oracle_complete(const TepFamily& fam, const Assignment& a, int n) {
  return oracle::complete(to_values(a), n, [&](int missing, Symbol x, Symbol y) {
    for (const auto& t : fam.accepted()) {
      std::array<Symbol, 2> others{};
      for (int i = 0, j = 0; i < 3; ++i)
        if (i != missing) others[j++] = t[i];
      if (others[0] == x && others[1] == y) return t[missing];
    }
    return Symbol(999);
  });
}

Assignment random_assignment(const Pattern& p, int alphabet, std::mt19937_64& rng) {
  Assignment a;
  for (Point c : p) a[c] = static_cast<Symbol>(rng() % alphabet);
  return a;
}

}  // namespace

TEST_CASE("validate accepts bipermutive rules") {
  auto xr = TepFamily::validate(2, triples_of(2, [](Symbol a, Symbol b, int) { return a ^ b; }));
  CHECK(xr.alphabet() == 2);
  CHECK(xr.accepted().size() == 4);
  auto add3 = TepFamily::validate(3, triples_of(3, [](Symbol a, Symbol b, int m) { return (a + b) % m; }));
  CHECK(add3.accepts({1, 2, 0}));
  CHECK_FALSE(add3.accepts({1, 2, 1}));
  CHECK(add3.forced(0, 2, 0) == 1);  // up missing: a + 2 = 0 mod 3
  CHECK(add3.forced(1, 1, 0) == 2);  // up-right missing: 1 + b = 0
  CHECK(add3.forced(2, 1, 1) == 2);
  auto sub5 = TepFamily::validate(5, triples_of(5, [](Symbol a, Symbol b, int m) { return (2 * a + 3 * b + 1) % m; }));
  CHECK(sub5.accepted().size() == 25);
}

TEST_CASE("validate rejects multiplication") {
  try {
    TepFamily::validate(2, triples_of(2, [](Symbol a, Symbol b, int) { return a * b; }));
    FAIL("expected NotTep");
  } catch (const NotTep& e) {
    CHECK(e.code() == "not_tep");
    CHECK(e.pos_a < e.pos_b);
    CHECK(e.extensions != 1);
  }
  CHECK_THROWS_AS(TepFamily::validate(2, {{0, 0, 0}, {0, 1, 1}, {1, 0, 1}, {1, 1, 2}}), BadParams);
}

TEST_CASE("rule specs") {
  CHECK(TepFamily::from_rule("xor").accepts({1, 1, 0}));
  CHECK(TepFamily::from_rule("add:3").accepts({2, 2, 1}));
  CHECK(TepFamily::from_rule("affine:1:2:1:5").accepts({1, 1, 4}));
  CHECK_THROWS_AS(TepFamily::from_rule("affine:2:1:0:4"), NotTep);
  CHECK_THROWS_AS(TepFamily::from_rule("mul:3"), BadParams);
  auto fam = TepFamily::from_rule("add:4");
  CHECK(parse_tep_family(render_tep_family(fam)).accepted() == fam.accepted());
  CHECK_THROWS_AS(parse_tep_family("alphabet 2\n0 0\n"), ParseError);
}

TEST_CASE("complete examples") {
  auto xr = TepFamily::from_rule("xor");
  Assignment a{{{0, 2}, 1}, {{1, 2}, 0}, {{2, 2}, 1}};
  Assignment full = complete(xr, a, 3);
  CHECK(full.size() == 6);
  CHECK(full.at({1, 1}) == 1);
  CHECK(full.at({2, 1}) == 1);
  CHECK(full.at({2, 0}) == 0);
  CHECK(is_valid(xr, full));
  CHECK(complete(xr, full, 3) == full);
  Assignment one{{{1, 1}, 1}};
  CHECK(complete(xr, one, 3) == one);
}

TEST_CASE("complete matches the scan oracle") {
  std::mt19937_64 rng(61);
  for (const char* rule : {"xor", "add:3", "affine:2:1:1:5"}) {
    auto fam = TepFamily::from_rule(rule);
    for (int trial = 0; trial < 100; ++trial) {
      int n = 1 + trial % 6;
      Pattern dom;
      for (Point c : size_n_triangle(n, {0, 0}))
        if (rng() % 3 == 0) dom.insert(c);
      Pattern basis = random_walk(p_nk(n, 0, {0, 0}), 40, rng());
      for (int which = 0; which < 2; ++which) {
        const Pattern& d = which ? basis : dom;
        Assignment a = random_assignment(d, fam.alphabet(), rng);
        Assignment got = complete(fam, a, n);
        CHECK(oracle::cells_of(domain_of(got)) ==
              oracle::cells_of(fill(d).intersected(size_n_triangle(n, {0, 0}))));
        if (which) {
          CHECK(to_values(got) == oracle_complete(fam, a, n));
          CHECK(got.size() == static_cast<std::size_t>(n * (n + 1) / 2));
          CHECK(is_valid(fam, got));
        }
      }
    }
  }
}

TEST_CASE("is_basis") {
  for (int n = 1; n <= 7; ++n)
    for (const auto& e : edges_of_triangle(n, {0, 0})) CHECK(is_basis(e, n));
  CHECK_FALSE(is_basis(size_n_triangle(2, {0, 0}), 2));
  CHECK_FALSE(is_basis(p_nk(3, 0, {0, 0}), 4));
}

TEST_CASE("basis means unique valid completion for every assignment") {
  auto xr = TepFamily::from_rule("xor");
  for (int n = 1; n <= 4; ++n) {
    auto tn = oracle::triangle(n);
    std::vector<oracle::Cell> cells(tn.begin(), tn.end());
    oracle::for_each_subset(cells, n, [&](const oracle::CellSet& s) {
      Pattern p = oracle::pattern_of(s);
      std::vector<Point> pts(p.begin(), p.end());
      std::set<std::vector<Symbol>> images;
      bool all_valid = true;
      for (std::uint32_t m = 0; m < (1u << n); ++m) {
        Assignment a;
        for (int i = 0; i < n; ++i) a[pts[i]] = (m >> i) & 1;
        Assignment c = complete(xr, a, n);
        if (c.size() != tn.size() || !is_valid(xr, c)) {
          all_valid = false;
          break;
        }
        std::vector<Symbol> img;
        for (auto& [q, v] : c) img.push_back(v);
        images.insert(img);
      }
      bool behaves = all_valid && images.size() == (1u << n);
      CHECK(is_basis(p, n) == behaves);
    });
  }
}

TEST_CASE("valid patterns on T_n number |alphabet|^n") {
  for (const char* rule : {"xor", "add:3"}) {
    auto fam = TepFamily::from_rule(rule);
    for (int n = 1; n <= 4; ++n) {
      Pattern line = p_nk(n, 0, {0, 0});
      std::set<std::vector<Symbol>> seen;
      std::uint64_t total = 1;
      for (int i = 0; i < n; ++i) total *= fam.alphabet();
      for (std::uint64_t m = 0; m < total; ++m) {
        Assignment a;
        std::uint64_t r = m;
        for (Point c : line) {
          a[c] = r % fam.alphabet();
          r /= fam.alphabet();
        }
        Assignment c = complete(fam, a, n);
        CHECK(is_valid(fam, c));
        std::vector<Symbol> img;
        for (auto& [q, v] : c) img.push_back(v);
        seen.insert(img);
      }
      CHECK(seen.size() == total);
    }
  }
}

TEST_CASE("basis_change") {
  auto xr = TepFamily::from_rule("xor");
  auto e2 = edges_of_triangle(2, {0, 0});
  Assignment a{{{0, 1}, 1}, {{1, 1}, 0}};
  Assignment b = basis_change(xr, e2[0], e2[2], 2, a);
  CHECK(b == Assignment{{{0, 1}, 1}, {{1, 0}, 1}});
  CHECK(basis_change(xr, e2[0], e2[0], 2, a) == a);
  CHECK_THROWS_AS(basis_change(xr, size_n_triangle(2, {0, 0}), e2[0], 2, a), NotABasis);

  std::mt19937_64 rng(62);
  for (int trial = 0; trial < 100; ++trial) {
    int n = 1 + trial % 6;
    auto fam = TepFamily::from_rule(trial % 2 ? "xor" : "add:3");
    Pattern p = random_walk(p_nk(n, 0, {0, 0}), 60, rng());
    Pattern q = random_walk(p_nk(n, 0, {0, 0}), 60, rng());
    Assignment x = random_assignment(p, fam.alphabet(), rng);
    CHECK(basis_change(fam, q, p, n, basis_change(fam, p, q, n, x)) == x);
  }
}

TEST_CASE("a move keeps the completion") {
  std::mt19937_64 rng(63);
  auto fam = TepFamily::from_rule("add:3");
  for (int trial = 0; trial < 100; ++trial) {
    int n = 2 + trial % 4;
    Pattern p = random_walk(p_nk(n, 0, {0, 0}), 40, rng());
    auto ms = legal_moves(p);
    Pattern q = p;
    for (auto& m : ms)
      if (size_n_triangle(n, {0, 0}).contains(m.to)) {
        q = apply_move(p, m);
        break;
      }
    CHECK(is_basis(q, n));
    Assignment x = random_assignment(p, 3, rng);
    Assignment y = basis_change(fam, p, q, n, x);
    CHECK(complete(fam, x, n) == complete(fam, y, n));
  }
}

TEST_CASE("compile_basis_change matches basis_change") {
  auto xr = TepFamily::from_rule("xor");
  auto e2 = edges_of_triangle(2, {0, 0});
  auto c = compile_basis_change(xr, e2[0], e2[2], 2);
  CHECK(c.alphabet == 2);
  for (std::uint32_t m = 0; m < 4; ++m) {
    std::vector<Symbol> vals{m & 1, (m >> 1) & 1};
    Assignment a;
    for (std::size_t i = 0; i < 2; ++i) a[c.source_order[i]] = vals[i];
    Assignment want = basis_change(xr, e2[0], e2[2], 2, a);
    auto got = c.apply(vals);
    for (std::size_t i = 0; i < 2; ++i) CHECK(got[i] == want.at(c.target_order[i]));
  }
  auto same = compile_basis_change(xr, e2[0], e2[0], 2);
  CHECK(same.path_moves == 0);

  std::mt19937_64 rng(64);
  for (int trial = 0; trial < 60; ++trial) {
    int n = 1 + trial % 5;
    auto fam = TepFamily::from_rule(trial % 2 ? "xor" : "add:3");
    Pattern p = random_walk(p_nk(n, 0, {0, 0}), 60, rng());
    Pattern q = random_walk(p_nk(n, 0, {0, 0}), 60, rng());
    auto cb = compile_basis_change(fam, p, q, n);
    for (const auto& perm : cb.perms) {
      std::set<std::uint32_t> img(perm.table.begin(), perm.table.end());
      CHECK(img.size() == perm.table.size());
      CHECK(perm.cell_i != perm.cell_j);
    }
    for (int s = 0; s < 20; ++s) {
      Assignment x = random_assignment(p, fam.alphabet(), rng);
      std::vector<Symbol> vals;
      for (Point pt : cb.source_order) vals.push_back(x.at(pt));
      auto got = cb.apply(vals);
      Assignment want = basis_change(fam, p, q, n, x);
      for (std::size_t i = 0; i < got.size(); ++i) CHECK(got[i] == want.at(cb.target_order[i]));
    }
  }
  CHECK_THROWS_AS(compile_basis_change(xr, p_nk(2, 0, {0, 0}), size_n_triangle(2, {0, 0}), 2), NotABasis);
}

TEST_CASE("assignment text round trip") {
  Assignment a{{{0, 2}, 1}, {{1, 2}, 0}, {{-3, 5}, 7}};
  CHECK(parse_assignment(render_assignment(a)) == a);
  CHECK_THROWS_AS(parse_assignment("0 0\n"), ParseError);
  CHECK_THROWS_AS(parse_assignment("0 0 1\n0 0 2\n"), ParseError);
}
