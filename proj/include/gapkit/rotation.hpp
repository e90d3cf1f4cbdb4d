#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "gapkit/rational.hpp"

namespace gapkit {

/// d-regular multigraph encoded as a port-labeled rotation map: an
/// involution on (vertex, port) pairs. A fixed pairing rot(v,i) = (v,j)
/// with i != j encodes a self-loop of multiplicity contribution 2 on the
/// adjacency diagonal; undirectedness with multiplicity is exactly the
/// involution property.
class RotationGraph {
 public:
  RotationGraph() = default;
  /// rot[v*d + i] = (u, j). Validates ranges and the involution.
  RotationGraph(int n, int d, std::vector<std::pair<int, int>> rot);

  int vertex_count() const { return n_; }
  int degree() const { return d_; }
  std::pair<int, int> rotate(int v, int port) const {
    return rot_[static_cast<std::size_t>(v) * d_ + port];
  }
  /// Neighbor reached from v through `port` (ignoring the return port).
  int neighbor(int v, int port) const { return rotate(v, port).first; }

 private:
  int n_ = 0;
  int d_ = 0;
  std::vector<std::pair<int, int>> rot_;
};

/// Margulis–Gabber–Galil graph on Z_k x Z_k: 8-regular, second eigenvalue
/// at most 5*sqrt(2), i.e. a (k^2, 8, 5*sqrt(2)/8)-expander. Ports 0..3 are
/// the affine maps T1..T4, ports 4..7 their inverses.
RotationGraph build_gabber_galil(int k);

/// K_n with the canonical port pairing; exact spectrum {n-1, -1,...,-1},
/// so it is an (n, n-1, 1/(n-1))-expander. Requires n >= 3.
RotationGraph build_complete(int n);

/// p-th power via rotation-map composition: ports are length-p sequences of
/// base ports (lexicographic), degree d^p, adjacency matrix = M^p.
/// Refuses if n * d^p exceeds `port_cap`.
RotationGraph power(const RotationGraph& h, int p,
                    std::int64_t port_cap = 10'000'000);

/// Smallest p with (5*sqrt(2)/8)^p <= alpha, decided exactly via the
/// equivalent rational inequality (25/32)^p <= alpha^2.
int select_power_for_alpha(const Rational& alpha_target);

/// JSON object {"n":..,"d":..,"rot":[[v,port],...]} in row-major
/// (vertex, port) order.
std::string emit_rotation(const RotationGraph& h);
RotationGraph parse_rotation(const std::string& json_text);

}  // namespace gapkit
