#include "gapkit/reductions.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "gapkit/bitset.hpp"

namespace gapkit {

// ---------------------------------------------------------------------------
// Clause grouping
// ---------------------------------------------------------------------------

GroupingParams make_grouping(int clause_count, int K, const Rational& lambda) {
  if (K < 1 || K > clause_count)
    throw std::invalid_argument("need 1 <= K <= clause count");
  if (!(lambda > 0 && lambda <= 1))
    throw std::invalid_argument("lambda must lie in (0,1]");
  GroupingParams p;
  p.K = K;
  p.lambda = lambda;
  p.groups.resize(K);
  // Contiguous, balanced: group i covers [i*m/K, (i+1)*m/K).
  for (int i = 0; i < K; ++i) {
    int lo = static_cast<int>(static_cast<long>(i) * clause_count / K);
    int hi = static_cast<int>(static_cast<long>(i + 1) * clause_count / K);
    for (int c = lo; c < hi; ++c) p.groups[i].push_back(c);
  }
  return p;
}

namespace {

std::vector<int> group_variables(const CnfFormula& f,
                                 const std::vector<int>& group) {
  std::set<int> vars;
  for (int c : group)
    for (const Literal& lit : f.clauses()[c]) vars.insert(lit.var);
  return {vars.begin(), vars.end()};
}

int satisfied_in_group(const CnfFormula& f, const std::vector<int>& group,
                       const std::vector<int>& vars,
                       const std::vector<std::uint8_t>& bits) {
  // Evaluate only the group's clauses under the partial assignment; every
  // variable of these clauses is in `vars`.
  int count = 0;
  for (int c : group) {
    bool sat = false;
    for (const Literal& lit : f.clauses()[c]) {
      auto it = std::lower_bound(vars.begin(), vars.end(), lit.var);
      bool value = bits[it - vars.begin()] != 0;
      if (value == lit.positive) {
        sat = true;
        break;
      }
    }
    if (sat) ++count;
  }
  return count;
}

bool vertices_conflict(const GroupingVertex& a, const GroupingVertex& b) {
  std::size_t i = 0, j = 0;
  while (i < a.vars.size() && j < b.vars.size()) {
    if (a.vars[i] < b.vars[j])
      ++i;
    else if (a.vars[i] > b.vars[j])
      ++j;
    else {
      if (a.bits[i] != b.bits[j]) return true;
      ++i;
      ++j;
    }
  }
  return false;
}

}  // namespace

GroupingGraph max3sat_to_is(const CnfFormula& f, const GroupingParams& params) {
  const int m = f.clause_count();
  if (params.K > m) throw std::invalid_argument("K exceeds clause count");
  if (!(params.lambda > 0 && params.lambda <= 1))
    throw std::invalid_argument("lambda must lie in (0,1]");
  for (const auto& clause : f.clauses())
    if (clause.size() > 3)
      throw std::invalid_argument("clause with more than 3 literals");

  const Rational threshold = params.lambda * m / params.K;

  GroupingGraph out;
  std::vector<std::vector<int>> blocks(params.K);
  for (int i = 0; i < params.K; ++i) {
    std::vector<int> vars = group_variables(f, params.groups[i]);
    const int s = static_cast<int>(vars.size());
    if (s > 20)
      throw std::invalid_argument("group variable count exceeds the cap");
    std::vector<std::uint8_t> bits(s, 0);
    for (std::uint32_t mask = 0; mask < (1u << s); ++mask) {
      for (int v = 0; v < s; ++v) bits[v] = (mask >> v) & 1;
      int sat = satisfied_in_group(f, params.groups[i], vars, bits);
      if (Rational(sat) >= threshold) {
        blocks[i].push_back(static_cast<int>(out.payload.size()));
        out.payload.push_back({i, vars, bits});
      }
    }
  }

  const int n = static_cast<int>(out.payload.size());
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (vertices_conflict(out.payload[u], out.payload[v]))
        edges.emplace_back(u, v);

  out.cpg.graph = Graph(n, std::move(edges));
  out.cpg.blocks = std::move(blocks);
  out.cpg.validate();
  return out;
}

std::string emit_grouping_sidecar(const GroupingGraph& gg) {
  nlohmann::json j;
  j["blocks"] = gg.cpg.blocks;
  auto payload = nlohmann::json::array();
  for (const auto& v : gg.payload) {
    nlohmann::json e;
    e["group"] = v.group;
    e["vars"] = v.vars;
    e["values"] = v.bits;
    payload.push_back(std::move(e));
  }
  j["vertices"] = std::move(payload);
  return j.dump() + "\n";
}

GroupingBoundVerdict check_grouping_bound(const CnfFormula& f,
                                          const GroupingParams& params,
                                          const Assignment& a) {
  GroupingBoundVerdict v;
  v.satisfied = count_satisfied(f, a);
  const int m = f.clause_count();
  const Rational threshold = params.lambda * m / params.K;
  for (const auto& group : params.groups) {
    int sat = 0;
    for (int c : group)
      if (f.clause_satisfied(c, a)) ++sat;
    if (Rational(sat) >= threshold) ++v.s;
  }
  v.bound = params.lambda * m + v.s * (1 - params.lambda) * m / params.K;
  v.holds = Rational(v.satisfied) <= v.bound;
  return v;
}

// ---------------------------------------------------------------------------
// Independent set -> dominating set gadget
// ---------------------------------------------------------------------------

int DsGadget::sentinel(int block) const {
  return original_vertex_count + block;
}

DsGadget is_to_ds(const CliquePartitionedGraph& g) {
  g.validate();
  for (const auto& block : g.blocks)
    if (block.empty()) throw std::invalid_argument("empty block");

  const int n = g.graph.vertex_count();
  const int K = g.block_count();
  const int guard_size = 3 * K;

  std::vector<int> block_of(n);
  for (int i = 0; i < K; ++i)
    for (int v : g.blocks[i]) block_of[v] = i;

  DsGadget out;
  out.K = K;
  out.original_vertex_count = n;

  // Layout: copies (original ids), sentinels t_i, guards S_i, then W_e for
  // cross-block edges in edge order.
  std::vector<DsVertexInfo> roles;
  for (int v = 0; v < n; ++v) roles.push_back({DsRole::kCopy, block_of[v], -1, v, -1});
  for (int i = 0; i < K; ++i) roles.push_back({DsRole::kSentinel, i, -1, -1, -1});
  int next = n + K;
  std::vector<int> guard_base(K);
  for (int i = 0; i < K; ++i) {
    guard_base[i] = next;
    for (int s = 0; s < guard_size; ++s)
      roles.push_back({DsRole::kGuard, i, -1, -1, -1});
    next += guard_size;
  }
  std::vector<std::pair<int, int>> cross_edges;
  for (auto [u, v] : g.graph.edges())
    if (block_of[u] != block_of[v]) cross_edges.emplace_back(u, v);
  std::vector<int> edge_guard_base(cross_edges.size());
  for (std::size_t e = 0; e < cross_edges.size(); ++e) {
    edge_guard_base[e] = next;
    auto [u, v] = cross_edges[e];
    for (int s = 0; s < guard_size; ++s)
      roles.push_back({DsRole::kEdgeGuard, block_of[u], block_of[v], u, v});
    next += guard_size;
  }

  std::vector<std::pair<int, int>> edges;
  // C'_i cliques.
  for (int i = 0; i < K; ++i)
    for (std::size_t a = 0; a < g.blocks[i].size(); ++a)
      for (std::size_t b = a + 1; b < g.blocks[i].size(); ++b)
        edges.emplace_back(g.blocks[i][a], g.blocks[i][b]);
  // Sentinels and guards joined to their clique copy.
  for (int i = 0; i < K; ++i) {
    int ti = out.sentinel(i);
    for (int v : g.blocks[i]) edges.emplace_back(ti, v);
    for (int s = 0; s < guard_size; ++s)
      for (int v : g.blocks[i]) edges.emplace_back(guard_base[i] + s, v);
  }
  // Edge guards.
  for (std::size_t e = 0; e < cross_edges.size(); ++e) {
    auto [u, v] = cross_edges[e];
    int bi = block_of[u], bj = block_of[v];
    for (int s = 0; s < guard_size; ++s) {
      int w = edge_guard_base[e] + s;
      edges.emplace_back(w, out.sentinel(bi));
      edges.emplace_back(w, out.sentinel(bj));
      for (int x : g.blocks[bi])
        if (x != u) edges.emplace_back(w, x);
      for (int x : g.blocks[bj])
        if (x != v) edges.emplace_back(w, x);
    }
  }

  out.graph = Graph(next, std::move(edges));
  out.roles = std::move(roles);
  return out;
}

std::string emit_ds_sidecar(const DsGadget& gadget) {
  nlohmann::json j;
  j["K"] = gadget.K;
  auto arr = nlohmann::json::array();
  for (const auto& r : gadget.roles) {
    nlohmann::json e;
    switch (r.role) {
      case DsRole::kCopy:
        e["role"] = "copy";
        e["block"] = r.block;
        e["original"] = r.original;
        break;
      case DsRole::kSentinel:
        e["role"] = "sentinel";
        e["block"] = r.block;
        break;
      case DsRole::kGuard:
        e["role"] = "guard";
        e["block"] = r.block;
        break;
      case DsRole::kEdgeGuard:
        e["role"] = "edge_guard";
        e["blocks"] = {r.block, r.block2};
        e["edge"] = {r.original, r.original2};
        break;
    }
    arr.push_back(std::move(e));
  }
  j["vertices"] = std::move(arr);
  return j.dump() + "\n";
}

bool dominates(const Graph& g, const std::vector<int>& s) {
  Bitset covered(g.vertex_count());
  for (int v : s) {
    covered.set(v);
    covered |= g.neighbors(v);
  }
  return covered.count() == g.vertex_count();
}

std::vector<int> is_witness_to_ds_witness(const CliquePartitionedGraph& g,
                                          const DsGadget& gadget,
                                          const std::vector<int>& is_witness) {
  if (!g.graph.is_independent(is_witness))
    throw std::invalid_argument("witness is not independent");
  std::vector<char> block_hit(gadget.K, 0);
  std::vector<int> out;
  for (int v : is_witness) {
    out.push_back(gadget.copy_of(v));
    block_hit[gadget.roles[v].block] = 1;
  }
  for (int i = 0; i < gadget.K; ++i) {
    if (block_hit[i]) continue;
    out.push_back(gadget.sentinel(i));
    out.push_back(*std::min_element(g.blocks[i].begin(), g.blocks[i].end()));
  }
  std::sort(out.begin(), out.end());
  if (!dominates(gadget.graph, out))
    throw std::runtime_error("translated set fails to dominate");
  return out;
}

std::vector<int> ds_witness_to_is_witness(const CliquePartitionedGraph& g,
                                          const DsGadget& gadget,
                                          const std::vector<int>& ds_witness) {
  if (!dominates(gadget.graph, ds_witness))
    throw std::invalid_argument("witness does not dominate");
  const int K = gadget.K;
  std::set<int> t(ds_witness.begin(), ds_witness.end());

  auto lowest_copy = [&](int block) {
    return *std::min_element(g.blocks[block].begin(), g.blocks[block].end());
  };
  auto has_copy_in = [&](int block) {
    for (int v : g.blocks[block])
      if (t.count(v)) return true;
    return false;
  };

  // Normalize per the gadget's exchange argument; each step preserves
  // domination and never grows the set.
  // 1. Guard members: drop, or swap into the clique copy they guard.
  for (int v : std::vector<int>(t.begin(), t.end())) {
    if (gadget.roles[v].role != DsRole::kGuard) continue;
    int block = gadget.roles[v].block;
    t.erase(v);
    if (!has_copy_in(block)) t.insert(lowest_copy(block));
  }
  // After step 1 every block has a copy in t (else its 3K guards could not
  // all have been dominated).
  // 2. Collapse multiple copies in one block onto the sentinel.
  for (int i = 0; i < K; ++i) {
    std::vector<int> picks;
    for (int v : g.blocks[i])
      if (t.count(v)) picks.push_back(v);
    for (std::size_t p = 1; p < picks.size(); ++p) {
      t.erase(picks[p]);
      t.insert(gadget.sentinel(i));
    }
  }
  // 3. Edge-guard members: drop, or swap onto a sentinel of an endpoint
  // block (always sufficient once every block holds exactly one copy).
  for (int v : std::vector<int>(t.begin(), t.end())) {
    if (gadget.roles[v].role != DsRole::kEdgeGuard) continue;
    t.erase(v);
    auto covered = [&] {
      return dominates(gadget.graph, std::vector<int>(t.begin(), t.end()));
    };
    if (covered()) continue;
    int ti = gadget.sentinel(gadget.roles[v].block);
    int tj = gadget.sentinel(gadget.roles[v].block2);
    bool added_i = t.insert(ti).second;
    if (covered()) continue;
    if (added_i) t.erase(ti);
    t.insert(tj);
    if (covered()) continue;
    t.insert(ti);  // last resort; the final size check guards the contract
  }
  if (!dominates(gadget.graph, std::vector<int>(t.begin(), t.end())))
    throw std::runtime_error("normalization broke domination");

  // Blocks whose sentinel is absent contribute their copy pick.
  std::vector<int> out;
  for (int i = 0; i < K; ++i) {
    if (t.count(gadget.sentinel(i))) continue;
    for (int v : g.blocks[i])
      if (t.count(v)) {
        out.push_back(v);
        break;
      }
  }
  std::sort(out.begin(), out.end());
  if (!g.graph.is_independent(out))
    throw std::runtime_error("translated set is not independent");
  if (static_cast<int>(out.size()) <
      2 * K - static_cast<int>(ds_witness.size()))
    throw std::runtime_error("translated independent set is too small");
  return out;
}

// ---------------------------------------------------------------------------
// Remaining gadgets
// ---------------------------------------------------------------------------

SetCoverInstance ds_to_setcover(const Graph& g) {
  SetCoverInstance inst;
  inst.ground_size = g.vertex_count();
  inst.sets.reserve(g.vertex_count());
  for (int v = 0; v < g.vertex_count(); ++v) {
    std::vector<int> closed = g.neighbors(v).to_vector();
    closed.push_back(v);
    std::sort(closed.begin(), closed.end());
    inst.sets.push_back(std::move(closed));
  }
  return inst;
}

Graph is_to_cb(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<std::pair<int, int>> edges;
  for (auto [u, v] : g.edges()) {
    edges.emplace_back(u, v);          // copy 1
    edges.emplace_back(n + u, n + v);  // copy 2
    edges.emplace_back(u, n + v);      // cross, both orientations
    edges.emplace_back(v, n + u);
  }
  for (int v = 0; v < n; ++v) edges.emplace_back(v, n + v);
  return Graph(2 * n, std::move(edges));
}

LinVcGraph lin3_to_vc(const LinSystem& sys) {
  LinVcGraph out;
  for (int e = 0; e < sys.equation_count(); ++e) {
    const auto& eq = sys.equations()[e];
    for (int mask = 0; mask < 8; ++mask) {
      std::uint8_t bi = mask & 1, bj = (mask >> 1) & 1, bk = (mask >> 2) & 1;
      if (((bi ^ bj ^ bk) & 1) != eq.rhs) continue;
      out.payload.push_back({e, {eq.i, eq.j, eq.k}, {bi, bj, bk}});
    }
  }
  const int n = static_cast<int>(out.payload.size());
  std::vector<std::pair<int, int>> edges;
  auto conflict = [](const LinVcVertex& a, const LinVcVertex& b) {
    std::size_t i = 0, j = 0;
    while (i < a.vars.size() && j < b.vars.size()) {
      if (a.vars[i] < b.vars[j])
        ++i;
      else if (a.vars[i] > b.vars[j])
        ++j;
      else {
        if (a.bits[i] != b.bits[j]) return true;
        ++i;
        ++j;
      }
    }
    return false;
  };
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (conflict(out.payload[u], out.payload[v])) edges.emplace_back(u, v);
  out.graph = Graph(n, std::move(edges));
  return out;
}

std::string emit_lin_vc_sidecar(const LinVcGraph& g) {
  auto arr = nlohmann::json::array();
  for (const auto& v : g.payload) {
    nlohmann::json e;
    e["equation"] = v.equation;
    e["vars"] = v.vars;
    e["values"] = v.bits;
    arr.push_back(std::move(e));
  }
  nlohmann::json j;
  j["vertices"] = std::move(arr);
  return j.dump() + "\n";
}

VcMinSatResult vc_to_minsat(const Graph& g) {
  for (int v = 0; v < g.vertex_count(); ++v)
    if (g.degree(v) == 0)
      throw std::invalid_argument(
          "isolated vertex would yield an empty clause");
  VcMinSatResult out;
  out.edge_of_var = g.edges();
  std::vector<std::vector<Literal>> clauses(g.vertex_count());
  for (int e = 0; e < g.edge_count(); ++e) {
    auto [u, v] = g.edges()[e];  // u < v: positive at u, negative at v
    clauses[u].push_back({e, true});
    clauses[v].push_back({e, false});
  }
  out.formula = CnfFormula(g.edge_count(), std::move(clauses));
  return out;
}

std::string emit_minsat_sidecar(const VcMinSatResult& r) {
  nlohmann::json j;
  auto vars = nlohmann::json::array();
  for (auto [u, v] : r.edge_of_var) vars.push_back({u, v});
  j["variable_edges"] = std::move(vars);
  return j.dump() + "\n";
}

}  // namespace gapkit
