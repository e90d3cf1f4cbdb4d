#pragma once

#include <cstdint>
#include <vector>

#include "gapkit/formula.hpp"
#include "gapkit/graph.hpp"
#include "gapkit/setcover.hpp"

namespace gapkit {

/// Result of an exact desk-scale solve. The witness is re-validated before
/// return and ties are broken toward the lexicographically smallest witness,
/// so results are byte-reproducible.
struct SolveResult {
  int value = 0;
  std::vector<int> witness;       // vertices, set indices, or (for the
                                  // assignment solvers) variables set true
  std::uint64_t explored = 0;     // search nodes / candidates examined
};

/// Branch and bound on bit-packed vertex sets with a greedy coloring bound.
SolveResult max_clique(const Graph& g, int vertex_cap = 200);
SolveResult max_independent_set(const Graph& g, int vertex_cap = 200);

/// n - alpha, witness = complement of the independent-set witness.
SolveResult min_vertex_cover(const Graph& g, int vertex_cap = 200);

/// Smallest dominating set of size <= size_cap by lexicographic subset
/// enumeration; value = -1 when none exists within the cap. Refuses when the
/// candidate count exceeds `budget`.
SolveResult min_dominating_set_bounded(const Graph& g, int size_cap,
                                       std::uint64_t budget = 10'000'000);

/// Largest vertex subset inducing a bipartite subgraph (exhaustive subset
/// scan, n <= vertex_cap <= ~20).
SolveResult max_induced_bipartite(const Graph& g, int vertex_cap = 16);

/// Exhaustive over assignments (var_count <= var_cap).
SolveResult max_sat(const CnfFormula& f, int var_cap = 24);
SolveResult min_sat(const CnfFormula& f, int var_cap = 24);
SolveResult max_lin(const LinSystem& sys, int var_cap = 24);

/// Minimum subfamily covering the ground set; throws on infeasible input.
SolveResult min_set_cover(const SetCoverInstance& inst, int set_cap = 24);

/// The subset-enumeration approximation scheme: largest independent set
/// among all vertex subsets of size <= c; value = min(alpha(g), c).
SolveResult subexp_approx_is(const Graph& g, int c,
                             std::uint64_t budget = 10'000'000);

}  // namespace gapkit
