#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "gapkit/bitset.hpp"

namespace gapkit {

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Simple undirected graph on vertices 0..n-1. Immutable after construction;
/// edges are stored canonically (u < v, lexicographically sorted) so emission
/// is byte-deterministic. Self-loops and duplicate edges are rejected.
class Graph {
 public:
  Graph() = default;
  Graph(int n, std::vector<std::pair<int, int>> edges);

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }

  bool has_edge(int u, int v) const {
    return u != v && adj_[u].test(v);
  }
  const Bitset& neighbors(int v) const { return adj_[v]; }
  int degree(int v) const { return adj_[v].count(); }

  /// True iff every pair of distinct vertices in `s` is adjacent.
  /// Singletons and the empty set count as cliques.
  bool is_clique(const std::vector<int>& s) const;
  bool is_independent(const std::vector<int>& s) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  int n_ = 0;
  std::vector<std::pair<int, int>> edges_;
  std::vector<Bitset> adj_;
};

Graph complement(const Graph& g);

/// DIMACS edge format: `p edge n m` header, `e u v` lines, 1-indexed.
/// Lines starting with `c` are comments.
Graph parse_graph(const std::string& text);
std::string emit_graph(const Graph& g);

/// Graph whose vertex set is partitioned into blocks, each inducing a
/// complete subgraph. Blocks may be empty (a grouping reduction with an
/// unreachable threshold produces one), but never overlap.
struct CliquePartitionedGraph {
  Graph graph;
  std::vector<std::vector<int>> blocks;

  int block_count() const { return static_cast<int>(blocks.size()); }

  /// Throws std::invalid_argument if the blocks do not partition the vertex
  /// set or some block contains a non-adjacent pair.
  void validate() const;
};

}  // namespace gapkit
