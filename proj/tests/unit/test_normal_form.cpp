#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "tsol/tsol.hpp"

using namespace tsol;

TEST_CASE("p_nk follows the row order") {
  CHECK(p_nk(4, 0, {0, 0}) == Pattern{{0, 3}, {1, 3}, {2, 3}, {3, 3}});
  CHECK(p_nk(4, 2, {0, 0}) == Pattern{{0, 3}, {1, 3}, {2, 3}, {3, 3}, {3, 2}, {2, 2}});
  CHECK(excess(p_nk(4, 2, {0, 0})).excess == 2);
  CHECK(fill(p_nk(4, 2, {0, 0})) == size_n_triangle(4, {0, 0}));
  for (int n = 1; n <= 7; ++n) {
    CHECK(p_nk(n, n * (n - 1) / 2, {0, 0}) == size_n_triangle(n, {0, 0}));
    for (int k = 0; k <= n * (n - 1) / 2; ++k) {
      CHECK(oracle::cells_of(p_nk(n, k, {0, 0})) == oracle::pnk(n, k));
      CHECK(p_nk(n, k, {2, -3}) == p_nk(n, k, {0, 0}).translated({2, -3}));
      if (k > 0) CHECK(p_nk(n, k, {0, 0}).contains(excess_slot(n, k - 1)));
    }
    CHECK_THROWS_AS(p_nk(n, n * (n - 1) / 2 + 1, {0, 0}), BadParams);
    CHECK_THROWS_AS(p_nk(n, -1, {0, 0}), BadParams);
  }
}

TEST_CASE("normal_form examples") {
  auto l5 = normal_form(p_nk(5, 0, {0, 0}));
  REQUIRE(l5.parts.size() == 1);
  CHECK(l5.parts[0] == NormalFormPart{{0, 0}, 5, 0});

  auto t3 = normal_form(size_n_triangle(3, {0, 0}));
  REQUIRE(t3.parts.size() == 1);
  CHECK(t3.parts[0] == NormalFormPart{{0, 0}, 3, 3});

  auto diag = normal_form(Pattern{{0, 1}, {1, 0}});
  REQUIRE(diag.parts.size() == 1);
  CHECK(diag.parts[0] == NormalFormPart{{0, 0}, 2, 0});

  CHECK(normal_form(Pattern{}).parts.empty());
  CHECK(realize(NormalForm{}).empty());
}

TEST_CASE("same_orbit") {
  for (int n = 1; n <= 8; ++n) {
    auto e = edges_of_triangle(n, {0, 0});
    CHECK(same_orbit(e[0], e[1]));
    CHECK(same_orbit(e[1], e[2]));
    CHECK(same_orbit(e[0], e[2]));
  }
  CHECK_FALSE(same_orbit(p_nk(3, 0, {0, 0}), p_nk(3, 0, {5, 0})));
  std::mt19937_64 rng(31);
  int tried = 0;
  while (tried < 1000) {
    Pattern p = oracle::pattern_of(oracle::random_pattern(rng, 7, 8));
    auto ms = legal_moves(p);
    if (ms.empty()) continue;
    ++tried;
    CHECK(same_orbit(p, apply_move(p, ms[rng() % ms.size()])));
  }
}

TEST_CASE("normal form conservation and idempotence") {
  std::mt19937_64 rng(32);
  for (int trial = 0; trial < 500; ++trial) {
    auto s = oracle::random_pattern(rng, 10, 1 + trial % 20);
    Pattern p = oracle::pattern_of(s);
    NormalForm nf = normal_form(p);
    long long sum_n = 0, sum_k = 0;
    for (auto& part : nf.parts) {
      CHECK(part.k >= 0);
      CHECK(part.k <= part.n * (part.n - 1) / 2);
      sum_n += part.n;
      sum_k += part.k;
    }
    long long e = oracle::excess(s);
    CHECK(sum_k == e);
    CHECK(sum_n == static_cast<long long>(p.size()) - e);
    Pattern r = realize(nf);
    CHECK(normal_form(r) == nf);
    CHECK(fill(r) == fill(p));
    CHECK(r.size() == p.size());
    for (std::size_t i = 1; i < nf.parts.size(); ++i) {
      const auto& a = nf.parts[i - 1];
      const auto& b = nf.parts[i];
      CHECK((RenderOrder{}(a.anchor, b.anchor) || (a.anchor == b.anchor && a.n < b.n)));
    }
  }
}

TEST_CASE("parts sharing an anchor") {
  // T_1 at (3,2) sits in the empty corner of (3,2) + T_3 without touching it.
  Pattern p = p_nk(3, 0, {3, 2}).united(Pattern{{3, 2}});
  auto nf = normal_form(p);
  REQUIRE(nf.parts.size() == 2);
  CHECK(nf.parts[0] == NormalFormPart{{3, 2}, 1, 0});
  CHECK(nf.parts[1] == NormalFormPart{{3, 2}, 3, 0});
  CHECK(parse_normal_form(render_normal_form(nf)) == nf);
  CHECK(realize(nf) == p);
}

TEST_CASE("normal form text round trip") {
  NormalForm nf{{{{0, 0}, 5, 0}}};
  CHECK(render_normal_form(nf) == "part 0 4 n=5 k=0\n");
  CHECK(parse_normal_form("part 0 4 n=5 k=0\n") == nf);
  std::mt19937_64 rng(33);
  for (int trial = 0; trial < 100; ++trial) {
    NormalForm g = normal_form(oracle::pattern_of(oracle::random_pattern(rng, 12, 10)));
    CHECK(parse_normal_form(render_normal_form(g)) == g);
  }
  CHECK_THROWS_AS(parse_normal_form("part 0 4 n=5\n"), ParseError);
  CHECK_THROWS_AS(parse_normal_form("part 0 4 n=3 k=9\n"), Error);
}

TEST_CASE("same_orbit agrees with BFS reachability for n <= 4") {
  for (int n = 1; n <= 4; ++n) {
    auto tn = oracle::triangle(n);
    std::vector<oracle::Cell> cells(tn.begin(), tn.end());
    std::vector<oracle::CellSet> all;
    oracle::for_each_subset(cells, n, [&](const oracle::CellSet& s) { all.push_back(s); });
    std::map<oracle::CellSet, int> comp;
    int next = 0;
    for (auto& s : all) {
      if (comp.count(s)) continue;
      for (auto& [v, d] : oracle::bfs(s)) comp[v] = next;
      ++next;
    }
    std::vector<NormalForm> nfs;
    for (auto& s : all) nfs.push_back(normal_form(oracle::pattern_of(s)));
    for (std::size_t i = 0; i < all.size(); ++i)
      for (std::size_t j = i; j < all.size(); ++j)
        CHECK((nfs[i] == nfs[j]) == (comp[all[i]] == comp[all[j]]));
  }
}

TEST_CASE("normal_form work is quadratic") {
  std::mt19937_64 rng(34);
  double worst = 0;
  for (int n : {10, 25, 50, 100, 200}) {
    Pattern p = random_walk(p_nk(n, 0, {0, 0}), 4 * n, rng());
    // noise: a few extra points below the line
    for (int i = 0; i < n / 10; ++i) p.insert({static_cast<Coord>(rng() % n), -static_cast<Coord>(rng() % 3) - 5});
    WorkCounter wc;
    normal_form(p, &wc);
    double ratio = static_cast<double>(wc.visits) / (static_cast<double>(p.size()) * p.size());
    worst = std::max(worst, ratio);
  }
  MESSAGE("normal_form visits / n^2 worst ratio " << worst);
  CHECK(worst <= 8.0);
}
