#include "gapkit/oracles.hpp"

#include <algorithm>
#include <stdexcept>

#include "gapkit/bitset.hpp"
#include "gapkit/reductions.hpp"  // dominates

namespace gapkit {

namespace {

// Tomita-style branch and bound: candidates are greedily colored, vertices
// are expanded in reverse color order, a branch is cut when the color bound
// cannot beat the incumbent.
class CliqueSolver {
 public:
  explicit CliqueSolver(const Graph& g) : g_(g), n_(g.vertex_count()) {}

  int solve(const Bitset& candidates, int lower_bound) {
    best_ = lower_bound;
    std::vector<int> current;
    expand(candidates, current);
    return best_;
  }

  std::uint64_t explored() const { return explored_; }

 private:
  void expand(const Bitset& candidates, std::vector<int>& current) {
    ++explored_;
    std::vector<int> order;
    std::vector<int> colors;
    color_sort(candidates, order, colors);
    Bitset cand = candidates;
    for (int idx = static_cast<int>(order.size()) - 1; idx >= 0; --idx) {
      if (static_cast<int>(current.size()) + colors[idx] <= best_) return;
      int v = order[idx];
      current.push_back(v);
      Bitset next = cand;
      next &= g_.neighbors(v);
      if (next.none()) {
        best_ = std::max(best_, static_cast<int>(current.size()));
      } else {
        expand(next, current);
      }
      current.pop_back();
      cand.reset(v);
    }
  }

  // Greedy coloring; emits vertices grouped by color, colors ascending.
  void color_sort(const Bitset& candidates, std::vector<int>& order,
                  std::vector<int>& colors) {
    Bitset uncolored = candidates;
    int color = 0;
    while (uncolored.any()) {
      ++color;
      Bitset avail = uncolored;
      for (int v = avail.find_first(); v >= 0; v = avail.find_next(v + 1)) {
        order.push_back(v);
        colors.push_back(color);
        uncolored.reset(v);
        avail.andnot(g_.neighbors(v));
      }
    }
  }

  const Graph& g_;
  int n_;
  int best_ = 0;
  std::uint64_t explored_ = 0;
};

int clique_value_within(const Graph& g, const Bitset& candidates, int lb,
                        std::uint64_t* explored) {
  CliqueSolver solver(g);
  int value = solver.solve(candidates, lb);
  if (explored) *explored += solver.explored();
  return value;
}

// next lexicographic k-combination of {0..n-1}; returns false when done
bool next_combination(std::vector<int>& c, int n) {
  int k = static_cast<int>(c.size());
  for (int i = k - 1; i >= 0; --i) {
    if (c[i] < n - k + i) {
      ++c[i];
      for (int j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
      return true;
    }
  }
  return false;
}

std::uint64_t binomial_capped(int n, int k, std::uint64_t cap) {
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) {
    r = r * (n - i + 1) / i;
    if (r > cap) return cap + 1;
  }
  return r;
}

}  // namespace

SolveResult max_clique(const Graph& g, int vertex_cap) {
  const int n = g.vertex_count();
  if (n > vertex_cap)
    throw std::invalid_argument("graph exceeds the clique solver cap");
  SolveResult res;
  if (n == 0) return res;

  Bitset all(n);
  all.set_all();
  res.value = clique_value_within(g, all, 0, &res.explored);

  // Lexicographically smallest witness by greedy forcing: vertex v joins the
  // prefix iff some maximum clique extends the forced set through v.
  Bitset cand = all;
  int need = res.value;
  for (int v = 0; v < n && need > 0; ++v) {
    if (!cand.test(v)) continue;
    Bitset next = cand;
    next &= g.neighbors(v);
    if (1 + clique_value_within(g, next, std::max(0, need - 2),
                                &res.explored) >=
        need) {
      res.witness.push_back(v);
      --need;
      cand = next;
    } else {
      cand.reset(v);
    }
  }
  if (static_cast<int>(res.witness.size()) != res.value ||
      !g.is_clique(res.witness))
    throw std::runtime_error("clique witness failed validation");
  return res;
}

SolveResult max_independent_set(const Graph& g, int vertex_cap) {
  SolveResult res = max_clique(complement(g), vertex_cap);
  if (!g.is_independent(res.witness))
    throw std::runtime_error("independent-set witness failed validation");
  return res;
}

SolveResult min_vertex_cover(const Graph& g, int vertex_cap) {
  SolveResult is = max_independent_set(g, vertex_cap);
  SolveResult res;
  res.explored = is.explored;
  res.value = g.vertex_count() - is.value;
  Bitset in_is(std::max(g.vertex_count(), 1));
  for (int v : is.witness) in_is.set(v);
  for (int v = 0; v < g.vertex_count(); ++v)
    if (!in_is.test(v)) res.witness.push_back(v);
  for (auto [u, v] : g.edges())
    if (in_is.test(u) && in_is.test(v))
      throw std::runtime_error("vertex-cover witness failed validation");
  return res;
}

SolveResult min_dominating_set_bounded(const Graph& g, int size_cap,
                                       std::uint64_t budget) {
  const int n = g.vertex_count();
  SolveResult res;
  if (n == 0) return res;
  size_cap = std::min(size_cap, n);

  std::uint64_t candidates = 0;
  for (int k = 1; k <= size_cap; ++k) {
    candidates += binomial_capped(n, k, budget);
    if (candidates > budget)
      throw std::invalid_argument("domination enumeration budget exceeded");
  }

  std::vector<Bitset> closed(n, Bitset(n));
  for (int v = 0; v < n; ++v) {
    closed[v] = g.neighbors(v);
    closed[v].set(v);
  }
  Bitset full(n);
  full.set_all();

  for (int k = 1; k <= size_cap; ++k) {
    std::vector<int> comb(k);
    for (int i = 0; i < k; ++i) comb[i] = i;
    do {
      ++res.explored;
      Bitset covered(n);
      for (int v : comb) covered |= closed[v];
      if (covered == full) {
        res.value = k;
        res.witness = comb;
        if (!dominates(g, res.witness))
          throw std::runtime_error("domination witness failed validation");
        return res;
      }
    } while (next_combination(comb, n));
  }
  res.value = -1;  // none within the cap
  return res;
}

SolveResult max_induced_bipartite(const Graph& g, int vertex_cap) {
  const int n = g.vertex_count();
  if (n > vertex_cap || n > 20)
    throw std::invalid_argument("graph exceeds the bipartite scan cap");
  SolveResult res;
  std::vector<int> color(n);
  std::vector<int> stack;
  auto bipartite = [&](std::uint32_t mask) {
    std::fill(color.begin(), color.end(), -1);
    for (int s = 0; s < n; ++s) {
      if (!((mask >> s) & 1) || color[s] != -1) continue;
      color[s] = 0;
      stack.assign(1, s);
      while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        const Bitset& nb = g.neighbors(v);
        for (int u = nb.find_first(); u >= 0; u = nb.find_next(u + 1)) {
          if (!((mask >> u) & 1)) continue;
          if (color[u] == -1) {
            color[u] = 1 - color[v];
            stack.push_back(u);
          } else if (color[u] == color[v]) {
            return false;
          }
        }
      }
    }
    return true;
  };
  std::uint32_t best_mask = 0;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    ++res.explored;
    int size = std::popcount(mask);
    if (size < res.value) continue;
    if (!bipartite(mask)) continue;
    if (size > res.value) {
      res.value = size;
      best_mask = mask;
    } else if (size == res.value && size > 0) {
      // lexicographically smallest vertex list wins
      std::uint32_t diff = best_mask ^ mask;
      if (diff && (mask & (diff & -diff))) best_mask = mask;
    }
  }
  for (int v = 0; v < n; ++v)
    if ((best_mask >> v) & 1) res.witness.push_back(v);
  if (!bipartite(best_mask))
    throw std::runtime_error("bipartite witness failed validation");
  return res;
}

namespace {

template <typename Instance, typename Count>
SolveResult assignment_scan(const Instance& inst, int var_cap, bool minimize,
                            Count count) {
  const int n = inst.var_count();
  if (n > var_cap)
    throw std::invalid_argument("instance exceeds the assignment scan cap");
  SolveResult res;
  res.value = minimize ? INT32_MAX : -1;
  std::uint32_t best_mask = 0;
  Assignment a(n, 0);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    ++res.explored;
    for (int v = 0; v < n; ++v) a[v] = (mask >> v) & 1;
    int c = count(a);
    if ((minimize && c < res.value) || (!minimize && c > res.value)) {
      res.value = c;
      best_mask = static_cast<std::uint32_t>(mask);
    }
  }
  if (res.value == INT32_MAX || res.value == -1) res.value = 0;  // n == 0
  for (int v = 0; v < n; ++v)
    if ((best_mask >> v) & 1) res.witness.push_back(v);
  // re-validate: recompute the count on the witness assignment
  Assignment check(n, 0);
  for (int v : res.witness) check[v] = 1;
  if (n > 0 && count(check) != res.value)
    throw std::runtime_error("assignment witness failed validation");
  return res;
}

}  // namespace

SolveResult max_sat(const CnfFormula& f, int var_cap) {
  return assignment_scan(f, var_cap, false,
                         [&](const Assignment& a) { return count_satisfied(f, a); });
}

SolveResult min_sat(const CnfFormula& f, int var_cap) {
  return assignment_scan(f, var_cap, true,
                         [&](const Assignment& a) { return count_satisfied(f, a); });
}

SolveResult max_lin(const LinSystem& sys, int var_cap) {
  return assignment_scan(sys, var_cap, false, [&](const Assignment& a) {
    return count_satisfied(sys, a);
  });
}

SolveResult min_set_cover(const SetCoverInstance& inst, int set_cap) {
  inst.validate();
  if (!inst.feasible())
    throw std::invalid_argument("infeasible set-cover instance");
  const int m = static_cast<int>(inst.sets.size());
  if (m > set_cap)
    throw std::invalid_argument("instance exceeds the set-cover scan cap");

  std::vector<Bitset> masks(m, Bitset(inst.ground_size));
  for (int s = 0; s < m; ++s)
    for (int e : inst.sets[s]) masks[s].set(e);
  Bitset full(inst.ground_size);
  full.set_all();

  SolveResult res;
  if (inst.ground_size == 0) return res;
  for (int k = 1; k <= m; ++k) {
    std::vector<int> comb(k);
    for (int i = 0; i < k; ++i) comb[i] = i;
    do {
      ++res.explored;
      Bitset covered(inst.ground_size);
      for (int s : comb) covered |= masks[s];
      if (covered == full) {
        res.value = k;
        res.witness = comb;
        return res;
      }
    } while (next_combination(comb, m));
  }
  throw std::runtime_error("unreachable: feasible instance had no cover");
}

SolveResult subexp_approx_is(const Graph& g, int c, std::uint64_t budget) {
  const int n = g.vertex_count();
  if (c < 1) throw std::invalid_argument("subset size cap must be >= 1");
  c = std::min(c, n);
  SolveResult res;
  if (n == 0) return res;

  std::uint64_t candidates = 0;
  for (int k = 1; k <= c; ++k) {
    candidates += binomial_capped(n, k, budget);
    if (candidates > budget)
      throw std::invalid_argument("subset enumeration budget exceeded");
  }

  // Largest subsets first: the first independent one is the answer.
  for (int k = c; k >= 1; --k) {
    std::vector<int> comb(k);
    for (int i = 0; i < k; ++i) comb[i] = i;
    do {
      ++res.explored;
      if (g.is_independent(comb)) {
        res.value = k;
        res.witness = comb;
        return res;
      }
    } while (next_combination(comb, n));
  }
  return res;
}

}  // namespace gapkit
