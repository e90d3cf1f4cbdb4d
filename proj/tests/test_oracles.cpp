#include <doctest.h>

#include <bit>

#include "gapkit/generate.hpp"
#include "gapkit/oracles.hpp"
#include "gapkit/reductions.hpp"  // dominates
#include "gapkit/rng.hpp"

using namespace gapkit;

namespace {

Graph cycle(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
  return Graph(n, std::move(edges));
}

Graph complete(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  return Graph(n, std::move(edges));
}

Graph star(int leaves) {
  std::vector<std::pair<int, int>> edges;
  for (int v = 1; v <= leaves; ++v) edges.emplace_back(0, v);
  return Graph(leaves + 1, std::move(edges));
}

}  // namespace

TEST_CASE("clique and IS on structured graphs") {
  CHECK(max_independent_set(cycle(5)).value == 2);
  CHECK(max_clique(cycle(5)).value == 2);
  CHECK(max_independent_set(complete(6)).value == 1);
  CHECK(max_clique(complete(6)).value == 6);
  CHECK(max_clique(Graph(0, {})).value == 0);
  CHECK(max_independent_set(Graph(3, {})).value == 3);
}

TEST_CASE("witnesses are lexicographically smallest") {
  // Two maximum independent sets in P_4: {0,2}, {0,3}, {1,3}; lex min {0,2}.
  Graph p4(4, {{0, 1}, {1, 2}, {2, 3}});
  CHECK(max_independent_set(p4).witness == std::vector<int>{0, 2});
  CHECK(max_clique(complete(4)).witness == std::vector<int>{0, 1, 2, 3});
  Graph two_triangles(6, {{0, 1}, {0, 2}, {1, 2}, {3, 4}, {3, 5}, {4, 5}});
  CHECK(max_clique(two_triangles).witness == std::vector<int>{0, 1, 2});
}

TEST_CASE("solvers agree with exhaustive search up to n = 6") {
  for (int i = 0; i < 120; ++i) {
    std::uint64_t s = trial_seed(3, i);
    int n = 1 + static_cast<int>(s % 6);
    Graph g = random_graph(n, 0.5, s);
    int best_is = 0, best_cl = 0, best_vc = n, best_ds = n;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
      std::vector<int> sub;
      for (int v = 0; v < n; ++v)
        if ((mask >> v) & 1) sub.push_back(v);
      int size = static_cast<int>(sub.size());
      if (g.is_independent(sub)) best_is = std::max(best_is, size);
      if (g.is_clique(sub)) best_cl = std::max(best_cl, size);
      if (dominates(g, sub)) best_ds = std::min(best_ds, size);
      bool cover = true;
      for (auto [u, v] : g.edges())
        if (!((mask >> u) & 1) && !((mask >> v) & 1)) cover = false;
      if (cover) best_vc = std::min(best_vc, size);
    }
    CHECK(max_independent_set(g).value == best_is);
    CHECK(max_clique(g).value == best_cl);
    CHECK(min_vertex_cover(g).value == best_vc);
    CHECK(min_dominating_set_bounded(g, n).value == best_ds);
  }
}

TEST_CASE("domination oracle basics") {
  CHECK(min_dominating_set_bounded(star(5), 2).value == 1);
  CHECK(min_dominating_set_bounded(Graph(4, {}), 4).value == 4);
  // cap too small -> -1
  CHECK(min_dominating_set_bounded(Graph(4, {}), 2).value == -1);
}

TEST_CASE("vertex cover identities") {
  CHECK(min_vertex_cover(complete(3)).value == 2);
  Graph matching(6, {{0, 1}, {2, 3}, {4, 5}});
  CHECK(min_vertex_cover(matching).value == 3);
  for (int i = 0; i < 50; ++i) {
    std::uint64_t s = trial_seed(23, i);
    Graph g = random_graph(2 + static_cast<int>(s % 7), 0.5, s);
    CHECK(min_vertex_cover(g).value ==
          g.vertex_count() - max_independent_set(g).value);
  }
}

TEST_CASE("max induced bipartite subgraph") {
  CHECK(max_induced_bipartite(complete(4)).value == 2);
  CHECK(max_induced_bipartite(cycle(6)).value == 6);
  CHECK(max_induced_bipartite(cycle(5)).value == 4);
  // agreement with an independent odd-cycle-free check
  for (int i = 0; i < 40; ++i) {
    std::uint64_t s = trial_seed(29, i);
    int n = 1 + static_cast<int>(s % 8);
    Graph g = random_graph(n, 0.5, s);
    int best = 0;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
      // 2-color by brute force over colorings of the chosen subset
      std::vector<int> sub;
      for (int v = 0; v < n; ++v)
        if ((mask >> v) & 1) sub.push_back(v);
      int k = static_cast<int>(sub.size());
      bool ok = false;
      for (std::uint32_t col = 0; col < (1u << k) && !ok; ++col) {
        bool proper = true;
        for (int a = 0; a < k && proper; ++a)
          for (int b = a + 1; b < k && proper; ++b)
            if (g.has_edge(sub[a], sub[b]) &&
                (((col >> a) & 1) == ((col >> b) & 1)))
              proper = false;
        ok = proper;
      }
      if (ok) best = std::max(best, k);
    }
    CHECK(max_induced_bipartite(g).value == best);
  }
}

TEST_CASE("assignment solvers") {
  CnfFormula single(2, {{{0, true}, {1, false}}});
  CHECK(max_sat(single).value == 1);
  CHECK(min_sat(single).value == 0);
  LinSystem eq(3, {{0, 1, 2, 0}});
  CHECK(max_lin(eq).value == 1);
  LinSystem contradictory(3, {{0, 1, 2, 0}, {0, 1, 2, 1}});
  CHECK(max_lin(contradictory).value == 1);
  // hill-climbing lower bound never exceeds the optimum
  for (int i = 0; i < 50; ++i) {
    std::uint64_t s = trial_seed(37, i);
    CnfFormula f = random_3cnf(7, 8, s);
    auto rng = make_rng(s ^ 9);
    Assignment a(7);
    for (auto& bit : a) bit = static_cast<std::uint8_t>(rng() & 1);
    int cur = count_satisfied(f, a);
    for (int step = 0; step < 50; ++step) {
      int v = static_cast<int>(rng() % 7);
      a[v] ^= 1;
      int now = count_satisfied(f, a);
      if (now >= cur)
        cur = now;
      else
        a[v] ^= 1;
    }
    CHECK(cur <= max_sat(f).value);
  }
}

TEST_CASE("min set cover") {
  SetCoverInstance singletons;
  singletons.ground_size = 4;
  singletons.sets = {{0}, {1}, {2}, {3}};
  CHECK(min_set_cover(singletons).value == 4);
  SetCoverInstance one_full;
  one_full.ground_size = 4;
  one_full.sets = {{0, 1}, {0, 1, 2, 3}};
  CHECK(min_set_cover(one_full).value == 1);
  SetCoverInstance infeasible;
  infeasible.ground_size = 2;
  infeasible.sets = {{0}};
  CHECK_THROWS_AS(min_set_cover(infeasible), std::invalid_argument);
}

TEST_CASE("subexponential IS approximation scheme") {
  CHECK(subexp_approx_is(Graph(5, {}), 2).value == 2);
  CHECK(subexp_approx_is(complete(5), 3).value == 1);
  for (int i = 0; i < 60; ++i) {
    std::uint64_t s = trial_seed(41, i);
    int n = 1 + static_cast<int>(s % 12);
    int c = 1 + static_cast<int>((s >> 8) % 4);
    Graph g = random_graph(n, 0.5, s);
    SolveResult approx = subexp_approx_is(g, c);
    CHECK(approx.value ==
          std::min(max_independent_set(g).value, c));
    CHECK(g.is_independent(approx.witness));
  }
}

TEST_CASE("solvers are deterministic") {
  Graph g = random_graph(10, 0.5, 4242);
  SolveResult a = max_clique(g);
  SolveResult b = max_clique(g);
  CHECK(a.value == b.value);
  CHECK(a.witness == b.witness);
  CHECK(a.explored == b.explored);
}
