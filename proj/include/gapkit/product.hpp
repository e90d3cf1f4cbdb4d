#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gapkit/graph.hpp"
#include "gapkit/rational.hpp"
#include "gapkit/rotation.hpp"

namespace gapkit {

/// One product vertex per (start, port sequence): distinct port sequences
/// with identical vertex sequences stay distinct, keeping N = n * d^(t-1)
/// exact.
struct WalkEntry {
  int id = 0;
  int start = 0;
  std::vector<int> ports;    // length t-1
  std::vector<int> visited;  // the t visited base vertices, in walk order
};

struct ProductResult {
  Graph graph;
  std::vector<WalkEntry> walks;
};

/// Walk graph over the expander h: vertices are (t-1)-step walks enumerated
/// in (start, port-sequence) lexicographic order; two walks are adjacent iff
/// the union of their visited base-vertex sets is a clique in g.
/// Requires h.vertex_count() == g.vertex_count() and
/// n * d^(t-1) <= vertex_cap.
ProductResult derandomized_product(const Graph& g, const RotationGraph& h,
                                   int t, std::int64_t vertex_cap = 5000);

std::string emit_walk_table(const std::vector<WalkEntry>& walks);

enum class ExpanderFamily { kComplete, kGabberGalil };

struct AmplifyParams {
  Rational a, b;       // promised clique densities, a > b > 0
  Rational r;          // target gap ratio in (0,1)
  Rational epsilon;    // padding slack
  Rational alpha;      // claimed expansion of the family member
  int t = 1;           // walk length of the product
  ExpanderFamily family = ExpanderFamily::kComplete;
  int member_size = 0;  // minimum member: n' vertices (complete) or k (GG)
  int member_power = 1;  // GG only

  /// Checks alpha < b/6, a(1-eps)-2*alpha > b+2*alpha, and ratio^t <= r,
  /// all exactly.
  void validate() const;
};

/// epsilon = (a-b)/(8a); alpha_target = min(b/6 * (1-1e-9), (a-b)/16);
/// smallest family member with alpha strictly below the target; smallest t
/// with ((b+2*alpha)/(a(1-eps)-2*alpha))^t <= r, all in exact rationals.
AmplifyParams select_amplification_params(
    const Rational& a, const Rational& b, const Rational& r,
    ExpanderFamily family = ExpanderFamily::kComplete,
    std::int64_t port_cap = 10'000'000);

struct AmplifyResult {
  Graph graph;        // G_r
  Rational a_r, b_r;  // (a(1-eps)-2alpha)^t and (b+2alpha)^t
  int padded_size = 0;     // n' (expander member size actually used)
  bool padding_ok = false;  // n/n' >= 1 - epsilon
  /// Yes-side bound that holds for the padded graph regardless of the
  /// padding ratio: (a*n/n' - 2alpha)^t. Equals at least a_r when
  /// padding_ok.
  Rational a_effective_r;
  std::vector<WalkEntry> walks;
};

/// Pads g with isolated vertices to the family member size n' >= n, builds
/// the derandomized product at params.t. When enforce_padding is set the
/// spec precondition n/n' >= 1-epsilon is a hard error; otherwise the result
/// reports padding_ok and the downgraded yes-side bound.
AmplifyResult amplify_gap(const Graph& g, const AmplifyParams& params,
                          bool enforce_padding = true,
                          std::int64_t vertex_cap = 5000);

}  // namespace gapkit
