#include <doctest.h>

#include <algorithm>

#include "gapkit/generate.hpp"
#include "gapkit/oracles.hpp"
#include "gapkit/reductions.hpp"
#include "gapkit/rng.hpp"

using namespace gapkit;

TEST_CASE("make_grouping is contiguous and balanced") {
  GroupingParams p = make_grouping(7, 3, Rational(1));
  REQUIRE(p.groups.size() == 3);
  std::vector<int> flat;
  for (const auto& g : p.groups) {
    CHECK((g.size() == 2 || g.size() == 3));
    flat.insert(flat.end(), g.begin(), g.end());
  }
  CHECK(flat == std::vector<int>{0, 1, 2, 3, 4, 5, 6});
  CHECK_THROWS_AS(make_grouping(2, 3, Rational(1)), std::invalid_argument);
  CHECK_THROWS_AS(make_grouping(2, 1, Rational(2)), std::invalid_argument);
}

TEST_CASE("grouping reduction block sizes and alpha, worked example") {
  // (x1 v x2 v x3) and (~x1 v x2), K=2, lambda=1: threshold = 1 clause per
  // group; 7 of 8 assignments satisfy clause 1, 3 of 4 satisfy clause 2.
  CnfFormula f(3, {{{0, true}, {1, true}, {2, true}}, {{0, false}, {1, true}}});
  GroupingParams params = make_grouping(2, 2, Rational(1));
  GroupingGraph gg = max3sat_to_is(f, params);
  gg.cpg.validate();
  REQUIRE(gg.cpg.block_count() == 2);
  CHECK(gg.cpg.blocks[0].size() == 7);
  CHECK(gg.cpg.blocks[1].size() == 3);
  CHECK(max_independent_set(gg.cpg.graph).value == 2);  // x1=0, x2=1
  // Payload sanity: block-0 vertices assign {x1,x2,x3}.
  CHECK(gg.payload[gg.cpg.blocks[0][0]].vars == std::vector<int>{0, 1, 2});
  CHECK(gg.payload[gg.cpg.blocks[1][0]].vars == std::vector<int>{0, 1});
}

TEST_CASE("unreachable threshold yields an empty block") {
  // Group {x1} and {~x1} into one group with lambda=1: no assignment
  // satisfies both clauses, so the single block is empty.
  CnfFormula f(1, {{{0, true}}, {{0, false}}});
  GroupingParams params = make_grouping(2, 1, Rational(1));
  GroupingGraph gg = max3sat_to_is(f, params);
  CHECK(gg.cpg.graph.vertex_count() == 0);
  CHECK(gg.cpg.blocks[0].empty());
}

TEST_CASE("grouping identity against assignment enumeration") {
  for (int i = 0; i < 25; ++i) {
    std::uint64_t s = trial_seed(31, i);
    CnfFormula f = random_3cnf(5, 6, s);
    GroupingParams params = make_grouping(6, 3, Rational(3, 4));
    GroupingGraph gg = max3sat_to_is(f, params);
    const Rational threshold = params.lambda * 6 / 3;
    int best = 0;
    Assignment a(5, 0);
    for (std::uint32_t mask = 0; mask < 32; ++mask) {
      for (int v = 0; v < 5; ++v) a[v] = (mask >> v) & 1;
      int groups_met = 0;
      for (const auto& group : params.groups) {
        int sat = 0;
        for (int c : group)
          if (f.clause_satisfied(c, a)) ++sat;
        if (Rational(sat) >= threshold) ++groups_met;
      }
      best = std::max(best, groups_met);
    }
    CHECK(max_independent_set(gg.cpg.graph, 2000).value == best);
    CHECK(best <= 3);  // alpha <= K always
  }
}

TEST_CASE("claim-1 counting bound") {
  CnfFormula f(3, {{{0, true}, {1, true}, {2, true}}, {{0, false}, {1, true}}});
  GroupingParams params = make_grouping(2, 2, Rational(3, 4));
  GroupingBoundVerdict v = check_grouping_bound(f, params, {0, 0, 0});
  CHECK(v.satisfied == 1);  // only the second clause
  CHECK(v.holds);
  // lambda=1 collapse: satisfying assignment attains bound = m with s = K.
  GroupingParams tight = make_grouping(2, 2, Rational(1));
  GroupingBoundVerdict w = check_grouping_bound(f, tight, {0, 1, 0});
  CHECK(w.satisfied == 2);
  CHECK(w.s == 2);
  CHECK(w.bound == Rational(2));
  CHECK(w.holds);
  // exhaustive over a random instance (m divisible by K: the bound's
  // premise is K groups of exactly m/K clauses)
  CnfFormula r = random_3cnf(6, 6, 555);
  GroupingParams p = make_grouping(6, 3, Rational(3, 4));
  Assignment a(6, 0);
  for (std::uint32_t mask = 0; mask < 64; ++mask) {
    for (int i = 0; i < 6; ++i) a[i] = (mask >> i) & 1;
    CHECK(check_grouping_bound(r, p, a).holds);
  }
}

TEST_CASE("ds gadget worked example: blocks {a,b},{c}, edge (a,c)") {
  CliquePartitionedGraph cpg;
  cpg.graph = Graph(3, {{0, 1}, {0, 2}});
  cpg.blocks = {{0, 1}, {2}};
  cpg.validate();
  DsGadget gadget = is_to_ds(cpg);
  // 3 copies + 2 sentinels + 2*6 guards + 6 edge guards = 23 vertices
  CHECK(gadget.graph.vertex_count() == 23);
  CHECK(gadget.K == 2);
  SolveResult alpha = max_independent_set(cpg.graph);
  CHECK(alpha.value == 2);  // {b, c} = {1, 2}
  SolveResult gamma = min_dominating_set_bounded(gadget.graph, 4);
  CHECK(gamma.value == 2);  // 2K - alpha
  // Role census
  int copies = 0, sentinels = 0, guards = 0, edge_guards = 0;
  for (const auto& info : gadget.roles) {
    if (info.role == DsRole::kCopy) ++copies;
    if (info.role == DsRole::kSentinel) ++sentinels;
    if (info.role == DsRole::kGuard) ++guards;
    if (info.role == DsRole::kEdgeGuard) ++edge_guards;
  }
  CHECK(copies == 3);
  CHECK(sentinels == 2);
  CHECK(guards == 12);      // 3K per block
  CHECK(edge_guards == 6);  // 3K for the single cross-block edge
}

TEST_CASE("ds gadget single-vertex block") {
  CliquePartitionedGraph cpg;
  cpg.graph = Graph(1, {});
  cpg.blocks = {{0}};
  DsGadget gadget = is_to_ds(cpg);
  CHECK(min_dominating_set_bounded(gadget.graph, 2).value == 1);  // 2K-alpha
}

TEST_CASE("ds gadget witness translators round trip") {
  for (int i = 0; i < 40; ++i) {
    std::uint64_t s = trial_seed(77, i);
    CliquePartitionedGraph cpg = random_clique_partitioned(2, 3, 0.5, s);
    DsGadget gadget = is_to_ds(cpg);
    const int K = cpg.block_count();
    SolveResult alpha = max_independent_set(cpg.graph);
    SolveResult gamma = min_dominating_set_bounded(gadget.graph, 2 * K);
    REQUIRE(gamma.value > 0);
    CHECK(alpha.value + gamma.value == 2 * K);
    auto ds = is_witness_to_ds_witness(cpg, gadget, alpha.witness);
    CHECK(static_cast<int>(ds.size()) == 2 * K - alpha.value);
    CHECK(dominates(gadget.graph, ds));
    auto is = ds_witness_to_is_witness(cpg, gadget, gamma.witness);
    CHECK(static_cast<int>(is.size()) >= 2 * K - gamma.value);
    CHECK(cpg.graph.is_independent(is));
  }
}

TEST_CASE("ds_to_setcover transfers the domination number") {
  Graph star(4, {{0, 1}, {0, 2}, {0, 3}});
  CHECK(min_set_cover(ds_to_setcover(star)).value == 1);
  SetCoverInstance empty3 = ds_to_setcover(Graph(3, {}));
  CHECK(min_set_cover(empty3).value == 3);
  for (int i = 0; i < 30; ++i) {
    std::uint64_t s = trial_seed(13, i);
    Graph g = random_graph(1 + static_cast<int>(s % 9), 0.4, s);
    CHECK(min_dominating_set_bounded(g, g.vertex_count()).value ==
          min_set_cover(ds_to_setcover(g)).value);
  }
}

TEST_CASE("is_to_cb on K_2 gives K_4") {
  Graph k2(2, {{0, 1}});
  Graph cb = is_to_cb(k2);
  CHECK(cb.vertex_count() == 4);
  CHECK(cb.edge_count() == 6);
  CHECK(max_induced_bipartite(cb).value == 2);  // 2 * alpha(K_2)
}

TEST_CASE("is_to_cb on the empty graph gives a perfect matching") {
  Graph e4(4, {});
  Graph cb = is_to_cb(e4);
  CHECK(cb.vertex_count() == 8);
  CHECK(cb.edge_count() == 4);
  for (int v = 0; v < 8; ++v) CHECK(cb.degree(v) == 1);
  CHECK(max_induced_bipartite(cb).value == 8);  // 2 * alpha
}

TEST_CASE("is_to_cb identity on random graphs") {
  for (int i = 0; i < 25; ++i) {
    std::uint64_t s = trial_seed(17, i);
    Graph g = random_graph(1 + static_cast<int>(s % 6), 0.5, s);
    CHECK(max_induced_bipartite(is_to_cb(g)).value ==
          2 * max_independent_set(g).value);
  }
}

TEST_CASE("lin3_to_vc on a single equation gives K_4") {
  LinSystem sys(3, {{0, 1, 2, 0}});
  LinVcGraph g = lin3_to_vc(sys);
  CHECK(g.graph.vertex_count() == 4);
  CHECK(g.graph.edge_count() == 6);
  CHECK(max_independent_set(g.graph).value == 1);
  CHECK(min_vertex_cover(g.graph).value == 3);
  // Each vertex's local assignment has even parity.
  for (const auto& v : g.payload) {
    CHECK(v.vars == std::vector<int>{0, 1, 2});
    CHECK((v.bits[0] ^ v.bits[1] ^ v.bits[2]) == 0);
  }
}

TEST_CASE("lin3_to_vc equations on disjoint variables are independent") {
  LinSystem sys(6, {{0, 1, 2, 0}, {3, 4, 5, 1}});
  LinVcGraph g = lin3_to_vc(sys);
  CHECK(g.graph.vertex_count() == 8);
  CHECK(max_independent_set(g.graph).value == 2);
  CHECK(min_vertex_cover(g.graph).value == 6);
}

TEST_CASE("lin3_to_vc identity on random systems") {
  for (int i = 0; i < 30; ++i) {
    std::uint64_t s = trial_seed(19, i);
    LinSystem sys = random_lin3(6, 5, s);
    LinVcGraph g = lin3_to_vc(sys);
    CHECK(g.graph.vertex_count() == 4 * sys.equation_count());
    CHECK(max_independent_set(g.graph).value == max_lin(sys).value);
  }
}

TEST_CASE("vc_to_minsat worked examples") {
  Graph triangle(3, {{0, 1}, {0, 2}, {1, 2}});
  VcMinSatResult r = vc_to_minsat(triangle);
  CHECK(r.formula.var_count() == 3);
  CHECK(r.formula.clause_count() == 3);
  CHECK(min_sat(r.formula).value == 2);  // = MVC(triangle)
  Graph edge(2, {{0, 1}});
  CHECK(min_sat(vc_to_minsat(edge).formula).value == 1);
  CHECK_THROWS_AS(vc_to_minsat(Graph(2, {})), std::invalid_argument);
}

TEST_CASE("vc_to_minsat clause lengths equal vertex degrees") {
  Graph g = random_graph_no_isolated(7, 0.4, 2024);
  VcMinSatResult r = vc_to_minsat(g);
  CHECK(r.formula.var_count() == g.edge_count());
  CHECK(r.formula.clause_count() == g.vertex_count());
  for (int v = 0; v < g.vertex_count(); ++v)
    CHECK(static_cast<int>(r.formula.clauses()[v].size()) == g.degree(v));
  CHECK(min_sat(r.formula).value == min_vertex_cover(g).value);
}

TEST_CASE("sidecar emitters are deterministic") {
  CnfFormula f(3, {{{0, true}, {1, true}, {2, true}}, {{0, false}, {1, true}}});
  GroupingGraph gg = max3sat_to_is(f, make_grouping(2, 2, Rational(1)));
  CHECK(emit_grouping_sidecar(gg) == emit_grouping_sidecar(gg));
  CliquePartitionedGraph cpg;
  cpg.graph = Graph(3, {{0, 1}, {0, 2}});
  cpg.blocks = {{0, 1}, {2}};
  DsGadget gadget = is_to_ds(cpg);
  CHECK(emit_ds_sidecar(gadget) == emit_ds_sidecar(gadget));
  LinVcGraph lv = lin3_to_vc(LinSystem(3, {{0, 1, 2, 0}}));
  CHECK(!emit_lin_vc_sidecar(lv).empty());
  VcMinSatResult ms = vc_to_minsat(Graph(2, {{0, 1}}));
  CHECK(!emit_minsat_sidecar(ms).empty());
}
