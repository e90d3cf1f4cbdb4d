#include "gapkit/product.hpp"

#include <algorithm>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "gapkit/bitset.hpp"

namespace gapkit {

namespace {

bool union_is_clique(const Graph& g, const Bitset& mask_u,
                     const Bitset& mask_w) {
  Bitset u = mask_u;
  u |= mask_w;
  // A set is a clique iff each member is adjacent to every other member.
  for (int v = u.find_first(); v >= 0; v = u.find_next(v + 1)) {
    Bitset rest = u;
    rest.reset(v);
    if (!rest.is_subset_of(g.neighbors(v))) return false;
  }
  return true;
}

}  // namespace

ProductResult derandomized_product(const Graph& g, const RotationGraph& h,
                                   int t, std::int64_t vertex_cap) {
  if (t < 1) throw std::invalid_argument("walk parameter t must be >= 1");
  const int n = g.vertex_count();
  if (h.vertex_count() != n)
    throw std::invalid_argument(
        "expander and base graph vertex counts differ");
  const int d = h.degree();
  std::int64_t walks = n;
  for (int s = 1; s < t; ++s) {
    walks *= d;
    if (walks > vertex_cap)
      throw std::invalid_argument("product exceeds the vertex cap; refusing");
  }
  if (walks > vertex_cap)
    throw std::invalid_argument("product exceeds the vertex cap; refusing");

  const int big_n = static_cast<int>(walks);
  std::vector<WalkEntry> table;
  table.reserve(big_n);
  std::vector<Bitset> visited_mask;
  visited_mask.reserve(big_n);
  std::vector<char> self_clique(big_n, 0);

  // (start, port sequence) lexicographic enumeration.
  std::vector<int> ports(t - 1, 0);
  for (int start = 0; start < n; ++start) {
    while (true) {
      WalkEntry e;
      e.id = static_cast<int>(table.size());
      e.start = start;
      e.ports = ports;
      e.visited.reserve(t);
      int cur = start;
      e.visited.push_back(cur);
      for (int s = 0; s < t - 1; ++s) {
        cur = h.neighbor(cur, ports[s]);
        e.visited.push_back(cur);
      }
      Bitset mask(n);
      for (int v : e.visited) mask.set(v);
      self_clique[e.id] = union_is_clique(g, mask, mask) ? 1 : 0;
      visited_mask.push_back(std::move(mask));
      table.push_back(std::move(e));

      // next port sequence
      int pos = t - 2;
      while (pos >= 0 && ports[pos] == d - 1) ports[pos--] = 0;
      if (pos < 0) break;
      ++ports[pos];
    }
  }

  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < big_n; ++u) {
    if (!self_clique[u]) continue;  // isolated by the adjacency rule
    for (int w = u + 1; w < big_n; ++w) {
      if (!self_clique[w]) continue;
      if (union_is_clique(g, visited_mask[u], visited_mask[w]))
        edges.emplace_back(u, w);
    }
  }
  return {Graph(big_n, std::move(edges)), std::move(table)};
}

std::string emit_walk_table(const std::vector<WalkEntry>& walks) {
  auto arr = nlohmann::json::array();
  for (const auto& w : walks) {
    nlohmann::json e;
    e["id"] = w.id;
    e["start"] = w.start;
    e["ports"] = w.ports;
    e["visited"] = w.visited;
    arr.push_back(std::move(e));
  }
  return arr.dump() + "\n";
}

void AmplifyParams::validate() const {
  if (!(b > 0 && a > b && a <= 1))
    throw std::invalid_argument("need 0 < b < a <= 1");
  if (!(r > 0 && r < 1)) throw std::invalid_argument("need r in (0,1)");
  if (!(alpha * 6 < b)) throw std::invalid_argument("need alpha < b/6");
  const Rational lo = b + 2 * alpha;
  const Rational hi = a * (1 - epsilon) - 2 * alpha;
  if (!(hi > lo))
    throw std::invalid_argument("need a(1-eps)-2alpha > b+2alpha");
  if (t < 1) throw std::invalid_argument("need t >= 1");
  if (rational_pow(lo / hi, static_cast<unsigned>(t)) > r)
    throw std::invalid_argument("selected t does not certify the ratio");
}

AmplifyParams select_amplification_params(const Rational& a, const Rational& b,
                                          const Rational& r,
                                          ExpanderFamily family,
                                          std::int64_t port_cap) {
  if (!(b > 0 && a > b && a <= 1))
    throw std::invalid_argument("need 0 < b < a <= 1");
  if (!(r > 0 && r < 1)) throw std::invalid_argument("need r in (0,1)");

  AmplifyParams p;
  p.a = a;
  p.b = b;
  p.r = r;
  p.family = family;
  p.epsilon = (a - b) / (8 * a);
  const Rational one_minus = Rational(999999999, 1000000000);
  const Rational candidate1 = Rational(b / 6) * one_minus;
  const Rational candidate2 = Rational((a - b) / 16);
  const Rational alpha_target = candidate1 < candidate2 ? candidate1 : candidate2;

  if (family == ExpanderFamily::kComplete) {
    // Smallest K_n with 1/(n-1) strictly below the target:
    // 1/(n-1) < alpha_target  <=>  n-1 > 1/alpha_target.
    Rational inv = 1 / alpha_target;
    BigInt floor_inv = numerator(inv) / denominator(inv);
    BigInt member = floor_inv + 2;
    p.member_size = static_cast<int>(member);
    p.member_power = 1;
    p.alpha = Rational(1, p.member_size - 1);
  } else {
    p.member_power = select_power_for_alpha(alpha_target);
    // Rational upper bound on (5*sqrt(2)/8)^p, tight enough for the
    // parameter inequalities: 883884/1000000 >= 5*sqrt(2)/8.
    p.alpha = rational_pow(Rational(883884, 1000000),
                           static_cast<unsigned>(p.member_power));
    if (p.alpha >= alpha_target)
      throw std::invalid_argument(
          "gabber-galil member bound exceeds the alpha target");
    std::int64_t ports = 4;  // smallest member k=2 has 4 vertices
    for (int i = 0; i < p.member_power; ++i) {
      ports *= 8;
      if (ports > port_cap)
        throw std::invalid_argument(
            "gabber-galil family cannot reach the alpha target under the "
            "size cap");
    }
    p.member_size = 2;  // smallest k; amplify grows it to cover the input
  }

  const Rational lo = b + 2 * p.alpha;
  const Rational hi = a * (1 - p.epsilon) - 2 * p.alpha;
  if (!(hi > lo))
    throw std::invalid_argument("parameter selection failed the separation");
  const Rational ratio = lo / hi;
  Rational cur = ratio;
  int t = 1;
  while (cur > r) {
    cur *= ratio;
    ++t;
  }
  p.t = t;
  p.validate();
  return p;
}

namespace {

RotationGraph family_member(const AmplifyParams& params, int min_vertices,
                            int* out_size) {
  if (params.family == ExpanderFamily::kComplete) {
    int size = std::max(params.member_size, std::max(min_vertices, 3));
    *out_size = size;
    return build_complete(size);
  }
  int k = 2;
  while (k * k < std::max(min_vertices, params.member_size * params.member_size))
    ++k;
  *out_size = k * k;
  return power(build_gabber_galil(k), params.member_power);
}

}  // namespace

AmplifyResult amplify_gap(const Graph& g, const AmplifyParams& params,
                          bool enforce_padding, std::int64_t vertex_cap) {
  params.validate();
  const int n = g.vertex_count();
  if (n < 1) throw std::invalid_argument("empty input graph");

  int padded = 0;
  RotationGraph member = family_member(params, n, &padded);
  const Rational padding_ratio(n, padded);
  const bool padding_ok = padding_ratio >= 1 - params.epsilon;
  if (enforce_padding && !padding_ok)
    throw std::invalid_argument(
        "padding-ratio precondition unmet: input too small relative to the "
        "expander member");

  // Isolated padding preserves the clique number.
  Graph padded_graph(padded, g.edges());
  ProductResult pr =
      derandomized_product(padded_graph, member, params.t, vertex_cap);

  AmplifyResult out;
  out.graph = std::move(pr.graph);
  out.walks = std::move(pr.walks);
  out.padded_size = padded;
  out.padding_ok = padding_ok;
  out.b_r = rational_pow(params.b + 2 * params.alpha,
                         static_cast<unsigned>(params.t));
  out.a_r = rational_pow(params.a * (1 - params.epsilon) - 2 * params.alpha,
                         static_cast<unsigned>(params.t));
  Rational eff = params.a * padding_ratio - 2 * params.alpha;
  out.a_effective_r =
      eff > 0 ? rational_pow(eff, static_cast<unsigned>(params.t))
              : Rational(0);
  return out;
}

}  // namespace gapkit
