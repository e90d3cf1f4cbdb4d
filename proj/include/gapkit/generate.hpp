#pragma once

#include <cstdint>

#include "gapkit/formula.hpp"
#include "gapkit/graph.hpp"
#include "gapkit/setcover.hpp"

namespace gapkit {

/// Seeded instance generators used by the verification suites and the
/// property tests. All draws go through a fixed-engine RNG so instances are
/// reproducible across machines.
Graph random_graph(int n, double edge_prob, std::uint64_t seed);
/// Random bipartite graph on ceil(n/2)+floor(n/2) vertices; triangle-free.
Graph random_bipartite(int n, double edge_prob, std::uint64_t seed);
/// Clique of size clique_size plus isolated vertices up to n.
Graph planted_clique(int n, int clique_size);
/// Random graph with min degree >= 1 (isolated vertices get a random edge).
Graph random_graph_no_isolated(int n, double edge_prob, std::uint64_t seed);

CnfFormula random_3cnf(int var_count, int clause_count, std::uint64_t seed);
LinSystem random_lin3(int var_count, int equation_count, std::uint64_t seed);
SetCoverInstance random_setcover(int ground_size, int set_count,
                                 std::uint64_t seed);
/// K blocks of size 1..max_block, intra-block cliques, random cross edges.
CliquePartitionedGraph random_clique_partitioned(int K, int max_block,
                                                 double cross_prob,
                                                 std::uint64_t seed);

}  // namespace gapkit
