#include "gapkit/generate.hpp"

#include <algorithm>
#include <set>

#include "gapkit/rng.hpp"

namespace gapkit {

Graph random_graph(int n, double edge_prob, std::uint64_t seed) {
  auto rng = make_rng(seed);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng) < edge_prob) edges.emplace_back(u, v);
  return Graph(n, std::move(edges));
}

Graph random_bipartite(int n, double edge_prob, std::uint64_t seed) {
  auto rng = make_rng(seed);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  int left = n / 2;
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < left; ++u)
    for (int v = left; v < n; ++v)
      if (coin(rng) < edge_prob) edges.emplace_back(u, v);
  return Graph(n, std::move(edges));
}

Graph planted_clique(int n, int clique_size) {
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < clique_size; ++u)
    for (int v = u + 1; v < clique_size; ++v) edges.emplace_back(u, v);
  return Graph(n, std::move(edges));
}

Graph random_graph_no_isolated(int n, double edge_prob, std::uint64_t seed) {
  auto rng = make_rng(seed);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  std::set<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng) < edge_prob) edges.insert({u, v});
  std::vector<int> degree(n, 0);
  for (auto [u, v] : edges) {
    ++degree[u];
    ++degree[v];
  }
  std::uniform_int_distribution<int> pick(0, n - 1);
  for (int v = 0; v < n; ++v) {
    while (degree[v] == 0) {
      int u = pick(rng);
      if (u == v) continue;
      auto e = std::minmax(u, v);
      if (edges.insert({e.first, e.second}).second) {
        ++degree[u];
        ++degree[v];
      }
    }
  }
  return Graph(n, {edges.begin(), edges.end()});
}

CnfFormula random_3cnf(int var_count, int clause_count, std::uint64_t seed) {
  auto rng = make_rng(seed);
  std::uniform_int_distribution<int> var(0, var_count - 1);
  std::uniform_int_distribution<int> len(1, 3);
  std::uniform_int_distribution<int> sign(0, 1);
  std::vector<std::vector<Literal>> clauses;
  for (int c = 0; c < clause_count; ++c) {
    int k = len(rng);
    std::set<int> vars;
    while (static_cast<int>(vars.size()) < std::min(k, var_count))
      vars.insert(var(rng));
    std::vector<Literal> clause;
    for (int v : vars) clause.push_back({v, sign(rng) == 1});
    clauses.push_back(std::move(clause));
  }
  return CnfFormula(var_count, std::move(clauses));
}

LinSystem random_lin3(int var_count, int equation_count, std::uint64_t seed) {
  auto rng = make_rng(seed);
  std::uniform_int_distribution<int> var(0, var_count - 1);
  std::uniform_int_distribution<int> rhs(0, 1);
  std::vector<LinSystem::Equation> eqs;
  for (int e = 0; e < equation_count; ++e) {
    std::set<int> vars;
    while (static_cast<int>(vars.size()) < 3) vars.insert(var(rng));
    auto it = vars.begin();
    int i = *it++, j = *it++, k = *it;
    eqs.push_back({i, j, k, rhs(rng)});
  }
  return LinSystem(var_count, std::move(eqs));
}

SetCoverInstance random_setcover(int ground_size, int set_count,
                                 std::uint64_t seed) {
  auto rng = make_rng(seed);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  SetCoverInstance inst;
  inst.ground_size = ground_size;
  inst.sets.resize(set_count);
  for (auto& s : inst.sets)
    for (int e = 0; e < ground_size; ++e)
      if (coin(rng) < 0.4) s.push_back(e);
  return inst;
}

CliquePartitionedGraph random_clique_partitioned(int K, int max_block,
                                                 double cross_prob,
                                                 std::uint64_t seed) {
  auto rng = make_rng(seed);
  std::uniform_int_distribution<int> block_size(1, max_block);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  CliquePartitionedGraph out;
  out.blocks.resize(K);
  int n = 0;
  for (int i = 0; i < K; ++i) {
    int size = block_size(rng);
    for (int s = 0; s < size; ++s) out.blocks[i].push_back(n++);
  }
  std::vector<int> block_of(n);
  for (int i = 0; i < K; ++i)
    for (int v : out.blocks[i]) block_of[v] = i;
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      if (block_of[u] == block_of[v])
        edges.emplace_back(u, v);
      else if (coin(rng) < cross_prob)
        edges.emplace_back(u, v);
    }
  out.graph = Graph(n, std::move(edges));
  out.validate();
  return out;
}

}  // namespace gapkit
