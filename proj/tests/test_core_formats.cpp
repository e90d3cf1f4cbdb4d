#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gapkit/digest.hpp"
#include "gapkit/formula.hpp"
#include "gapkit/generate.hpp"
#include "gapkit/graph.hpp"
#include "gapkit/oracles.hpp"
#include "gapkit/rational.hpp"
#include "gapkit/rng.hpp"
#include "gapkit/setcover.hpp"

using namespace gapkit;

TEST_CASE("parse_graph reads DIMACS edge text") {
  Graph g = parse_graph("c comment\np edge 3 2\ne 1 2\ne 2 3\n");
  CHECK(g.vertex_count() == 3);
  CHECK(g.edge_count() == 2);
  CHECK(g.has_edge(0, 1));
  CHECK(g.has_edge(1, 2));
  CHECK(!g.has_edge(0, 2));
}

TEST_CASE("parse_graph rejects malformed input with distinct errors") {
  CHECK_THROWS_WITH_AS(parse_graph("p edge 2 1\ne 1 1\n"),
                       doctest::Contains("self-loop"), ParseError);
  CHECK_THROWS_WITH_AS(parse_graph("p edge 2 2\ne 1 2\ne 1 2\n"),
                       doctest::Contains("duplicate"), ParseError);
  CHECK_THROWS_WITH_AS(parse_graph("p edge 2 1\ne 1 3\n"),
                       doctest::Contains("range"), ParseError);
  CHECK_THROWS_AS(parse_graph("e 1 2\n"), ParseError);           // no header
  CHECK_THROWS_AS(parse_graph("p edge 3 2\ne 1 2\n"), ParseError);  // count
}

TEST_CASE("emit_graph is canonical") {
  CHECK(emit_graph(Graph(0, {})) == "p edge 0 0\n");
  Graph triangle(3, {{2, 1}, {0, 2}, {1, 0}});
  CHECK(emit_graph(triangle) == "p edge 3 3\ne 1 2\ne 1 3\ne 2 3\n");
}

TEST_CASE("emit_graph is injective on labeled graphs with n <= 4") {
  // Enumerate every labeled graph on 4 vertices and hash its emission.
  std::vector<std::pair<int, int>> pairs;
  for (int u = 0; u < 4; ++u)
    for (int v = u + 1; v < 4; ++v) pairs.emplace_back(u, v);
  std::set<std::string> seen;
  for (std::uint32_t mask = 0; mask < (1u << pairs.size()); ++mask) {
    std::vector<std::pair<int, int>> edges;
    for (std::size_t i = 0; i < pairs.size(); ++i)
      if ((mask >> i) & 1) edges.push_back(pairs[i]);
    seen.insert(emit_graph(Graph(4, std::move(edges))));
  }
  CHECK(seen.size() == 64);  // 2^6 labeled graphs, all distinct
}

TEST_CASE("graph round trip on seeded random instances") {
  for (int i = 0; i < 100; ++i) {
    std::uint64_t s = trial_seed(42, i);
    Graph g = random_graph(1 + static_cast<int>(s % 12), 0.5, s);
    CHECK(parse_graph(emit_graph(g)) == g);
  }
}

TEST_CASE("complement is an involution and swaps cliques with IS") {
  Graph k4(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
  CHECK(complement(k4).edge_count() == 0);
  Graph c5(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}});
  Graph c5c = complement(c5);
  CHECK(c5c.edge_count() == 5);  // C_5 is self-complementary
  CHECK(complement(c5c) == c5);
  for (int i = 0; i < 100; ++i) {
    std::uint64_t s = trial_seed(7, i);
    Graph g = random_graph(1 + static_cast<int>(s % 10), 0.5, s);
    CHECK(complement(complement(g)) == g);
    CHECK(max_independent_set(g).value == max_clique(complement(g)).value);
  }
}

TEST_CASE("cnf parse/emit") {
  CnfFormula f = parse_cnf("p cnf 2 1\n1 -2 0\n");
  CHECK(f.var_count() == 2);
  CHECK(f.clause_count() == 1);
  CHECK(f.clauses()[0] == std::vector<Literal>{{0, true}, {1, false}});
  CHECK(parse_cnf(emit_cnf(f)) == f);
  CHECK_THROWS_AS(parse_cnf("p cnf 2 1\n0\n"), ParseError);    // empty clause
  CHECK_THROWS_AS(parse_cnf("p cnf 2 1\n1 -1 0\n"), ParseError);  // repeat var
  CHECK_THROWS_AS(parse_cnf("p cnf 2 1\n3 0\n"), ParseError);  // out of range
}

TEST_CASE("lin3 parse/emit") {
  LinSystem sys = parse_lin3("p lin3 3 1\n1 2 3 0\n");
  CHECK(sys.var_count() == 3);
  CHECK(sys.equations()[0] == LinSystem::Equation{0, 1, 2, 0});
  CHECK(parse_lin3(emit_lin3(sys)) == sys);
  CHECK_THROWS_AS(parse_lin3("p lin3 3 1\n1 1 2 0\n"), ParseError);
  CHECK_THROWS_AS(parse_lin3("p lin3 3 1\n1 2 3 2\n"), ParseError);
}

TEST_CASE("set-cover parse/emit") {
  SetCoverInstance inst;
  inst.ground_size = 3;
  inst.sets = {{0, 1}, {2}};
  CHECK(parse_setcover(emit_setcover(inst)) == inst);
  CHECK(inst.feasible());
  inst.sets = {{0, 1}};
  CHECK(!inst.feasible());
}

TEST_CASE("count_satisfied matches a per-clause re-evaluation") {
  CnfFormula single(2, {{{0, true}, {1, false}}});
  CHECK(count_satisfied(single, {1, 0}) == 1);
  CHECK(count_satisfied(single, {0, 1}) == 0);
  LinSystem eq(3, {{0, 1, 2, 0}});
  CHECK(count_satisfied(eq, {0, 0, 0}) == 1);
  CHECK(count_satisfied(eq, {1, 0, 0}) == 0);
  for (int i = 0; i < 50; ++i) {
    std::uint64_t s = trial_seed(11, i);
    CnfFormula f = random_3cnf(5, 6, s);
    auto rng = make_rng(s ^ 1);
    Assignment a(5);
    for (auto& bit : a) bit = static_cast<std::uint8_t>(rng() & 1);
    int direct = 0;
    for (int c = 0; c < f.clause_count(); ++c) {
      bool sat = false;
      for (const Literal& lit : f.clauses()[c])
        if ((a[lit.var] == 1) == lit.positive) sat = true;
      if (sat) ++direct;
    }
    CHECK(count_satisfied(f, a) == direct);
  }
}

TEST_CASE("clique partition validation") {
  Graph g(3, {{0, 1}});
  CliquePartitionedGraph good{g, {{0, 1}, {2}}};
  CHECK_NOTHROW(good.validate());
  CliquePartitionedGraph bad{g, {{0, 2}, {1}}};  // 0-2 not adjacent
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
  CliquePartitionedGraph overlap{g, {{0, 1}, {1, 2}}};
  CHECK_THROWS_AS(overlap.validate(), std::invalid_argument);
}

TEST_CASE("rationals and digests") {
  CHECK(parse_rational("3/4") == Rational(3, 4));
  CHECK(parse_rational("0.25") == Rational(1, 4));
  CHECK(parse_rational("-3") == Rational(-3));
  CHECK(rational_to_string(Rational(3, 4)) == "3/4");
  CHECK(rational_pow(Rational(2, 3), 3) == Rational(8, 27));
  CHECK(digest_hex("") == "cbf29ce484222325");
  CHECK(digest_hex("a") != digest_hex("b"));
}
