#include "gapkit/graph.hpp"

#include <algorithm>
#include <sstream>

namespace gapkit {

Graph::Graph(int n, std::vector<std::pair<int, int>> edges) : n_(n) {
  if (n < 0) throw std::invalid_argument("negative vertex count");
  for (auto& [u, v] : edges) {
    if (u == v) throw std::invalid_argument("self-loop");
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw std::invalid_argument("vertex index out of range");
    if (u > v) std::swap(u, v);
  }
  std::sort(edges.begin(), edges.end());
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
    throw std::invalid_argument("duplicate edge");
  edges_ = std::move(edges);
  adj_.assign(n_, Bitset(n_));
  for (auto [u, v] : edges_) {
    adj_[u].set(v);
    adj_[v].set(u);
  }
}

bool Graph::is_clique(const std::vector<int>& s) const {
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j)
      if (s[i] != s[j] && !has_edge(s[i], s[j])) return false;
  return true;
}

bool Graph::is_independent(const std::vector<int>& s) const {
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j)
      if (has_edge(s[i], s[j])) return false;
  return true;
}

Graph complement(const Graph& g) {
  int n = g.vertex_count();
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (!g.has_edge(u, v)) edges.emplace_back(u, v);
  return Graph(n, std::move(edges));
}

Graph parse_graph(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  bool have_header = false;
  int n = 0;
  long m = 0;
  std::vector<std::pair<int, int>> edges;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string tag;
    if (!(ls >> tag)) continue;
    if (tag == "c") continue;
    if (tag == "p") {
      std::string fmt;
      if (have_header || !(ls >> fmt >> n >> m) || fmt != "edge" || n < 0 ||
          m < 0)
        throw ParseError("malformed header: " + line);
      have_header = true;
    } else if (tag == "e") {
      if (!have_header) throw ParseError("edge before header");
      int u, v;
      if (!(ls >> u >> v)) throw ParseError("malformed edge line: " + line);
      if (u < 1 || v < 1 || u > n || v > n)
        throw ParseError("vertex index out of range: " + line);
      if (u == v) throw ParseError("self-loop: " + line);
      edges.emplace_back(u - 1, v - 1);
    } else {
      throw ParseError("unrecognized line: " + line);
    }
  }
  if (!have_header) throw ParseError("missing header");
  if (static_cast<long>(edges.size()) != m)
    throw ParseError("edge count does not match header");
  try {
    return Graph(n, std::move(edges));
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

std::string emit_graph(const Graph& g) {
  std::ostringstream out;
  out << "p edge " << g.vertex_count() << " " << g.edge_count() << "\n";
  for (auto [u, v] : g.edges()) out << "e " << u + 1 << " " << v + 1 << "\n";
  return out.str();
}

void CliquePartitionedGraph::validate() const {
  int n = graph.vertex_count();
  std::vector<int> owner(n, -1);
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    for (int v : blocks[b]) {
      if (v < 0 || v >= n)
        throw std::invalid_argument("block vertex out of range");
      if (owner[v] != -1) throw std::invalid_argument("overlapping blocks");
      owner[v] = static_cast<int>(b);
    }
    if (!graph.is_clique(blocks[b]))
      throw std::invalid_argument("block is not a clique");
  }
  for (int v = 0; v < n; ++v)
    if (owner[v] == -1)
      throw std::invalid_argument("vertex not covered by any block");
  if (blocks.empty()) throw std::invalid_argument("no blocks");
}

}  // namespace gapkit
