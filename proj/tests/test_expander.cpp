#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "gapkit/rational.hpp"
#include "gapkit/rotation.hpp"
#include "gapkit/spectral.hpp"

using namespace gapkit;

namespace {
const double kFiveSqrtTwo = 5.0 * std::sqrt(2.0);

RotationGraph cycle4() {
  // C_4: port 0 = successor, port 1 = predecessor.
  std::vector<std::pair<int, int>> rot(8);
  for (int v = 0; v < 4; ++v) {
    rot[v * 2 + 0] = {(v + 1) % 4, 1};
    rot[v * 2 + 1] = {(v + 3) % 4, 0};
  }
  return RotationGraph(4, 2, std::move(rot));
}
}  // namespace

TEST_CASE("gabber-galil structure at k=2") {
  RotationGraph h = build_gabber_galil(2);
  CHECK(h.vertex_count() == 4);
  CHECK(h.degree() == 8);
  // Involution is enforced by the constructor; re-check explicitly.
  for (int v = 0; v < 4; ++v)
    for (int i = 0; i < 8; ++i) {
      auto [u, j] = h.rotate(v, i);
      CHECK(h.rotate(u, j) == std::make_pair(v, i));
    }
  CHECK_THROWS_AS(build_gabber_galil(1), std::invalid_argument);
}

TEST_CASE("gabber-galil neighbors of (0,0) at k=3, by hand") {
  // T1(0,0)=(0,0)  T2=(1,0)  T3=(0,0)  T4=(0,1)
  // T1^-1=(0,0)  T2^-1=(2,0)  T3^-1=(0,0)  T4^-1=(0,2); id = 3x + y.
  RotationGraph h = build_gabber_galil(3);
  std::vector<int> nbrs;
  for (int i = 0; i < 8; ++i) nbrs.push_back(h.neighbor(0, i));
  std::sort(nbrs.begin(), nbrs.end());
  CHECK(nbrs == std::vector<int>{0, 0, 0, 0, 1, 2, 3, 6});
}

TEST_CASE("gabber-galil spectral bound for small k") {
  for (int k = 2; k <= 6; ++k) {
    SpectralReport rep = second_eigenvalue(build_gabber_galil(k));
    CHECK(rep.d == 8);
    CHECK(rep.lambda_hat <= kFiveSqrtTwo + 1e-6);
  }
}

TEST_CASE("complete-graph rotation maps") {
  RotationGraph k3 = build_complete(3);
  CHECK(k3.vertex_count() == 3);
  CHECK(k3.degree() == 2);
  CHECK_THROWS_AS(build_complete(2), std::invalid_argument);
  for (int n = 3; n <= 20; ++n) {
    RotationGraph h = build_complete(n);
    for (int v = 0; v < n; ++v)
      for (int i = 0; i < n - 1; ++i) {
        auto [u, j] = h.rotate(v, i);
        CHECK(u != v);
        CHECK(h.rotate(u, j) == std::make_pair(v, i));
      }
  }
}

TEST_CASE("complete-graph spectrum and expander check") {
  SpectralReport k5 = second_eigenvalue(build_complete(5));
  CHECK(k5.lambda_hat == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(k5.alpha_observed == doctest::Approx(0.25).epsilon(1e-9));
  CHECK(verify_expander(build_complete(14), Rational(1, 13)).pass);
}

TEST_CASE("bipartite C_4 has lambda_hat = d") {
  SpectralReport rep = second_eigenvalue(cycle4());
  CHECK(rep.lambda_hat == doctest::Approx(2.0).epsilon(1e-9));
  CHECK(!verify_expander(cycle4(), Rational(9, 10)).pass);
}

TEST_CASE("powering composes rotation maps") {
  RotationGraph k3 = build_complete(3);
  RotationGraph k3p1 = power(k3, 1);
  CHECK(k3p1.degree() == 2);
  for (int v = 0; v < 3; ++v)
    for (int i = 0; i < 2; ++i)
      CHECK(k3p1.neighbor(v, i) == k3.neighbor(v, i));

  RotationGraph sq = power(k3, 2);
  CHECK(sq.degree() == 4);
  SpectralReport rep = second_eigenvalue(sq);
  CHECK(rep.lambda_hat == doctest::Approx(1.0).epsilon(1e-6));  // 1 = 1^2

  RotationGraph gg2 = build_gabber_galil(2);
  double lam = second_eigenvalue(gg2).lambda_hat;
  double lam2 = second_eigenvalue(power(gg2, 2)).lambda_hat;
  CHECK(lam2 == doctest::Approx(lam * lam).epsilon(1e-6));
  CHECK_THROWS_AS(power(gg2, 9), std::invalid_argument);  // port cap
}

TEST_CASE("power adjacency equals the matrix power, densely") {
  // Count multi-edges of gg2^2 directly against two-step walk counts.
  RotationGraph h = build_gabber_galil(2);
  RotationGraph h2 = power(h, 2);
  const int n = 4;
  std::vector<std::vector<int>> m1(n, std::vector<int>(n, 0));
  for (int v = 0; v < n; ++v)
    for (int i = 0; i < 8; ++i) ++m1[v][h.neighbor(v, i)];
  std::vector<std::vector<int>> want(n, std::vector<int>(n, 0));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) want[a][c] += m1[a][b] * m1[b][c];
  std::vector<std::vector<int>> got(n, std::vector<int>(n, 0));
  for (int v = 0; v < n; ++v)
    for (int q = 0; q < h2.degree(); ++q) ++got[v][h2.neighbor(v, q)];
  CHECK(got == want);
}

TEST_CASE("select_power_for_alpha certified values") {
  CHECK(select_power_for_alpha(Rational(9, 10)) == 1);
  CHECK(select_power_for_alpha(Rational(1, 2)) == 6);
  CHECK(select_power_for_alpha(Rational(1, 10)) == 19);
  CHECK_THROWS_AS(select_power_for_alpha(Rational(1)), std::invalid_argument);
  CHECK_THROWS_AS(select_power_for_alpha(Rational(0)), std::invalid_argument);
}

TEST_CASE("rotation json round trip") {
  RotationGraph h = build_gabber_galil(3);
  RotationGraph back = parse_rotation(emit_rotation(h));
  CHECK(back.vertex_count() == h.vertex_count());
  CHECK(back.degree() == h.degree());
  for (int v = 0; v < h.vertex_count(); ++v)
    for (int i = 0; i < h.degree(); ++i)
      CHECK(back.rotate(v, i) == h.rotate(v, i));
  CHECK(emit_rotation(back) == emit_rotation(h));
}
