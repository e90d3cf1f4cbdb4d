#pragma once

#include <string>
#include <vector>

#include "gapkit/formula.hpp"
#include "gapkit/graph.hpp"
#include "gapkit/rational.hpp"
#include "gapkit/setcover.hpp"

namespace gapkit {

// ---------------------------------------------------------------------------
// Clause grouping: max-3-sat -> independent set on a clique-partitioned graph
// ---------------------------------------------------------------------------

struct GroupingParams {
  int K = 1;
  Rational lambda = 1;  // threshold parameter in (0, 1]
  /// Contiguous, balanced partition of clause indices (sizes differ by <= 1).
  std::vector<std::vector<int>> groups;
};

/// Block i of the grouping: group index, the group's variables (sorted) and
/// block boundaries in clause-index space come from `groups`.
GroupingParams make_grouping(int clause_count, int K, const Rational& lambda);

struct GroupingVertex {
  int group = 0;
  std::vector<int> vars;           // sorted variable indices of the group
  std::vector<std::uint8_t> bits;  // assignment to vars, same order
};

struct GroupingGraph {
  CliquePartitionedGraph cpg;
  std::vector<GroupingVertex> payload;  // indexed by vertex id
};

/// One vertex per partial assignment to a group's variables that satisfies
/// at least lambda*m/K of the group's clauses (exact rational threshold);
/// edges join vertices assigning some shared variable oppositely. Requires
/// every clause to have <= 3 literals and every group <= 20 variables.
GroupingGraph max3sat_to_is(const CnfFormula& f, const GroupingParams& params);

std::string emit_grouping_sidecar(const GroupingGraph& gg);

struct GroupingBoundVerdict {
  int satisfied = 0;   // clauses satisfied by the assignment
  int s = 0;           // groups where the threshold is met
  Rational bound;      // lambda*m + s*(1-lambda)*m/K
  bool holds = false;  // satisfied <= bound
};

/// The counting bound behind the grouping reduction: an assignment meeting
/// the threshold in s groups satisfies at most lambda*m + s(1-lambda)m/K
/// clauses overall.
GroupingBoundVerdict check_grouping_bound(const CnfFormula& f,
                                          const GroupingParams& params,
                                          const Assignment& a);

// ---------------------------------------------------------------------------
// Independent set -> dominating set gadget
// ---------------------------------------------------------------------------

enum class DsRole { kCopy, kSentinel, kGuard, kEdgeGuard };

struct DsVertexInfo {
  DsRole role = DsRole::kCopy;
  int block = -1;       // block i for copy / sentinel / guard
  int block2 = -1;      // second block for edge guards
  int original = -1;    // original vertex: copies and edge-guard endpoints
  int original2 = -1;   // second endpoint for edge guards
};

struct DsGadget {
  Graph graph;
  int K = 0;
  std::vector<DsVertexInfo> roles;  // indexed by gadget vertex id
  /// Gadget id of the copy of original vertex v (copies keep original ids).
  int copy_of(int v) const { return v; }
  int sentinel(int block) const;  // t_i
  int original_vertex_count = 0;
};

/// The alpha <-> 2K-alpha gadget: copy each block as a clique C'_i, attach a
/// 3K guard set S_i and a sentinel t_i to each, and for every cross-block
/// edge e=(u,v) a 3K edge-guard set W_e joined to t_i, t_j, C'_i minus u and
/// C'_j minus v. Requires nonempty blocks.
DsGadget is_to_ds(const CliquePartitionedGraph& g);

std::string emit_ds_sidecar(const DsGadget& gadget);

/// Independent set of G -> dominating set of the gadget of size 2K - |S|,
/// domination verified before return.
std::vector<int> is_witness_to_ds_witness(const CliquePartitionedGraph& g,
                                          const DsGadget& gadget,
                                          const std::vector<int>& is_witness);

/// Dominating set of the gadget -> independent set of G of size
/// >= 2K - |T|, independence verified before return.
std::vector<int> ds_witness_to_is_witness(const CliquePartitionedGraph& g,
                                          const DsGadget& gadget,
                                          const std::vector<int>& ds_witness);

bool dominates(const Graph& g, const std::vector<int>& s);

// ---------------------------------------------------------------------------
// Remaining gadgets
// ---------------------------------------------------------------------------

/// Dominating set -> set cover: ground set = vertices, one set per closed
/// neighborhood.
SetCoverInstance ds_to_setcover(const Graph& g);

/// Independent set -> maximum induced bipartite subgraph: two copies of g,
/// cross edges for i=j and for every edge of g.
Graph is_to_cb(const Graph& g);

struct LinVcVertex {
  int equation = 0;
  std::vector<int> vars;           // the equation's 3 variables, sorted
  std::vector<std::uint8_t> bits;  // satisfying local assignment
};

struct LinVcGraph {
  Graph graph;  // exactly 4 vertices per equation
  std::vector<LinVcVertex> payload;
};

/// max-3-lin -> vertex cover, FGLSS-style: one vertex per (equation,
/// satisfying local assignment), edges between conflicting assignments.
LinVcGraph lin3_to_vc(const LinSystem& sys);

std::string emit_lin_vc_sidecar(const LinVcGraph& g);

struct VcMinSatResult {
  CnfFormula formula;
  /// Variable index of each edge, aligned with g.edges() order.
  std::vector<std::pair<int, int>> edge_of_var;
  /// Clause index of vertex v is v itself.
};

/// Vertex cover -> min-sat: one variable per edge (positive at the lower
/// endpoint, negative at the higher), one clause per vertex. Rejects
/// isolated vertices.
VcMinSatResult vc_to_minsat(const Graph& g);

std::string emit_minsat_sidecar(const VcMinSatResult& r);

}  // namespace gapkit
