#include "gapkit/rotation.hpp"

#include <stdexcept>

#include <nlohmann/json.hpp>

#include "gapkit/graph.hpp"  // ParseError

namespace gapkit {

RotationGraph::RotationGraph(int n, int d, std::vector<std::pair<int, int>> rot)
    : n_(n), d_(d), rot_(std::move(rot)) {
  if (n < 1 || d < 1) throw std::invalid_argument("rotation graph needs n >= 1, d >= 1");
  if (rot_.size() != static_cast<std::size_t>(n) * d)
    throw std::invalid_argument("rotation map is not total");
  for (int v = 0; v < n_; ++v) {
    for (int i = 0; i < d_; ++i) {
      auto [u, j] = rotate(v, i);
      if (u < 0 || u >= n_ || j < 0 || j >= d_)
        throw std::invalid_argument("rotation image out of range");
      if (rotate(u, j) != std::make_pair(v, i))
        throw std::invalid_argument("rotation map is not an involution");
    }
  }
}

RotationGraph build_gabber_galil(int k) {
  if (k < 2) throw std::invalid_argument("gabber-galil needs k >= 2");
  const int n = k * k;
  const int d = 8;
  auto idx = [k](int x, int y) { return x * k + y; };
  auto wrap = [k](int a) { return ((a % k) + k) % k; };
  std::vector<std::pair<int, int>> rot(static_cast<std::size_t>(n) * d);
  for (int x = 0; x < k; ++x) {
    for (int y = 0; y < k; ++y) {
      int v = idx(x, y);
      // T1..T4 on ports 0..3, inverses on ports 4..7.
      const int nbr[8][2] = {
          {wrap(x + y), y},     {wrap(x + y + 1), y},
          {x, wrap(y + x)},     {x, wrap(y + x + 1)},
          {wrap(x - y), y},     {wrap(x - y - 1), y},
          {x, wrap(y - x)},     {x, wrap(y - x - 1)},
      };
      for (int i = 0; i < d; ++i)
        rot[static_cast<std::size_t>(v) * d + i] = {idx(nbr[i][0], nbr[i][1]),
                                                    (i + 4) % 8};
    }
  }
  return RotationGraph(n, d, std::move(rot));
}

RotationGraph build_complete(int n) {
  if (n < 3) throw std::invalid_argument("complete family needs n >= 3");
  const int d = n - 1;
  std::vector<std::pair<int, int>> rot(static_cast<std::size_t>(n) * d);
  for (int v = 0; v < n; ++v) {
    for (int i = 0; i < d; ++i) {
      int u = i < v ? i : i + 1;          // i-th neighbor of v, ascending
      int j = v < u ? v : v - 1;          // port of v in u's neighbor list
      rot[static_cast<std::size_t>(v) * d + i] = {u, j};
    }
  }
  return RotationGraph(n, d, std::move(rot));
}

RotationGraph power(const RotationGraph& h, int p, std::int64_t port_cap) {
  if (p < 1) throw std::invalid_argument("power needs p >= 1");
  const int n = h.vertex_count();
  const int d = h.degree();
  std::int64_t dp = 1;
  for (int i = 0; i < p; ++i) {
    dp *= d;
    if (dp * n > port_cap)
      throw std::invalid_argument("power exceeds the port cap; refusing");
  }
  const int dpow = static_cast<int>(dp);
  std::vector<std::pair<int, int>> rot(static_cast<std::size_t>(n) * dpow);
  std::vector<int> digits(p);
  for (int v = 0; v < n; ++v) {
    for (int q = 0; q < dpow; ++q) {
      // Decode q as the port sequence (i_1..i_p), most significant first.
      int rem = q;
      for (int s = p - 1; s >= 0; --s) {
        digits[s] = rem % d;
        rem /= d;
      }
      // Walk, collecting the paired port of each step; the return port is
      // the reversed paired sequence, which makes the power an involution.
      int cur = v;
      std::vector<int> paired(p);
      for (int s = 0; s < p; ++s) {
        auto [u, j] = h.rotate(cur, digits[s]);
        cur = u;
        paired[s] = j;
      }
      std::int64_t ret = 0;
      for (int s = p - 1; s >= 0; --s) ret = ret * d + paired[s];
      rot[static_cast<std::size_t>(v) * dpow + q] = {cur,
                                                     static_cast<int>(ret)};
    }
  }
  return RotationGraph(n, dpow, std::move(rot));
}

int select_power_for_alpha(const Rational& alpha_target) {
  if (alpha_target <= 0 || alpha_target >= 1)
    throw std::invalid_argument("alpha target must lie in (0,1)");
  // (5*sqrt(2)/8)^p <= alpha  <=>  (25/32)^p <= alpha^2, decided exactly.
  const Rational base(25, 32);
  const Rational target = alpha_target * alpha_target;
  Rational cur = base;
  int p = 1;
  while (cur > target) {
    cur *= base;
    ++p;
  }
  return p;
}

std::string emit_rotation(const RotationGraph& h) {
  nlohmann::json j;
  j["n"] = h.vertex_count();
  j["d"] = h.degree();
  auto rot = nlohmann::json::array();
  for (int v = 0; v < h.vertex_count(); ++v)
    for (int i = 0; i < h.degree(); ++i) {
      auto [u, port] = h.rotate(v, i);
      rot.push_back({u, port});
    }
  j["rot"] = std::move(rot);
  return j.dump() + "\n";
}

RotationGraph parse_rotation(const std::string& json_text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed rotation json: ") + e.what());
  }
  try {
    int n = j.at("n").get<int>();
    int d = j.at("d").get<int>();
    auto pairs = j.at("rot").get<std::vector<std::pair<int, int>>>();
    return RotationGraph(n, d, std::move(pairs));
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed rotation json: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

}  // namespace gapkit
