#include "doctest.h"
#include "hilbloc/errors.hpp"
#include "hilbloc/identities.hpp"
#include "hilbloc/localize.hpp"
#include "hilbloc/toric.hpp"

using namespace hilbloc;

TEST_CASE("standard surfaces") {
  ToricSurface p2 = projective_plane();
  CHECK(p2.rays().size() == 3);
  CHECK(p2.charts().size() == 3);
  auto inv = intersection_numbers(p2, trivial_bundle(p2));
  CHECK(inv.e == 3);
  CHECK(inv.K2 == 9);
  for (std::int64_t a = 0; a <= 5; ++a) {
    auto h = intersection_numbers(hirzebruch(a), trivial_bundle(hirzebruch(a)));
    CHECK(h.K2 == 8);
    CHECK(h.e == 4);
  }
  // F_0 and P1 x P1 have the same fan.
  CHECK(hirzebruch(0).rays() == p1_x_p1().rays());
  CHECK_THROWS_AS(ToricSurface::from_rays({{1, 0}, {0, 1}, {-1, -2}}), InvalidGeometry);
  CHECK_THROWS_AS(ToricSurface::from_rays({{1, 0}, {-1, -1}, {0, 1}}), InvalidGeometry);
  CHECK_THROWS_AS(ToricSurface::from_rays({{2, 0}, {0, 1}, {-1, -1}}), InvalidGeometry);
}

TEST_CASE("intersection numbers from the fan") {
  for (std::int64_t m = -3; m <= 3; ++m) {
    auto inv = intersection_numbers(projective_plane(), plane_bundle(m), 0);
    CHECK(inv.M2 == m * m);
    CHECK(inv.MK == -3 * m);
    CHECK(inv.C2 == 1);
    CHECK(inv.MC == m);
    CHECK(inv.eC == 2);
  }
  for (std::int64_t x = -2; x <= 2; ++x)
    for (std::int64_t y = -2; y <= 2; ++y) {
      auto inv = intersection_numbers(p1_x_p1(), p1p1_bundle(x, y));
      CHECK(inv.M2 == 2 * x * y);
      CHECK(inv.MK == -2 * x - 2 * y);
      CHECK(inv.K2 == 8);
    }
  // x C0 + y f on F_a: C0^2 = -a, C0.f = 1, f^2 = 0, K = -2 C0 - (a+2) f.
  for (std::int64_t a = 0; a <= 3; ++a)
    for (std::int64_t x = -2; x <= 2; ++x)
      for (std::int64_t y = -2; y <= 2; ++y) {
        auto inv = intersection_numbers(hirzebruch(a), hirzebruch_bundle(x, y));
        CHECK(inv.M2 == -a * x * x + 2 * x * y);
        CHECK(inv.MK == -(2 * (-a * x + y) + (a + 2) * x));
        CHECK(hirzebruch(a).self_intersection(1) == -a);
        CHECK(hirzebruch(a).self_intersection(3) == a);
      }
}

TEST_CASE("chart weights glue") {
  for (const auto& s : {projective_plane(), p1_x_p1(), hirzebruch(1), hirzebruch(3)}) {
    std::size_t k = s.charts().size();
    for (std::size_t i = 0; i < k; ++i) {
      const FixedChart& c = s.charts()[i];
      const FixedChart& n = s.charts()[(i + 1) % k];
      CHECK(c.ray2 == n.ray1);
      CHECK(c.w1 == -n.w2);
      CHECK(n.w1 == c.w2 - s.self_intersection(c.ray2) * c.w1);
    }
  }
}

TEST_CASE("bundle weights") {
  ToricSurface p2 = projective_plane();
  for (int c = 0; c < 3; ++c) CHECK(bundle_weight_at(p2, trivial_bundle(p2), c).is_zero());
  // O(1): the weights at the ends of each invariant line differ by a multiple of its tangent weight.
  for (int c = 0; c < 3; ++c) {
    LinForm d = bundle_weight_at(p2, plane_bundle(1), (c + 1) % 3) - bundle_weight_at(p2, plane_bundle(1), c);
    LinForm w = p2.charts()[c].w1;
    CHECK((d == w || d == -w || d.is_zero()));
  }
  for (std::int64_t a = 0; a <= 3; ++a) {
    ToricSurface h = hirzebruch(a);
    EqLineBundle f = hirzebruch_bundle(0, 1);
    int vanishing = 0;
    for (int c = 0; c < 4; ++c) vanishing += bundle_weight_at(h, f, c).is_zero();
    CHECK(vanishing == 2);
  }
  ToricSurface t = ToricSurface::total_space(0);
  for (int c = 0; c < 2; ++c) CHECK(bundle_weight_at(t, total_space_bundle(0), c).is_zero());
  for (std::int64_t a = -3; a <= 3; ++a) {
    ToricSurface ta = ToricSurface::total_space(a);
    CHECK(ta.charts()[0].w2 - ta.charts()[1].w1 == a * kT1);
  }
}

TEST_CASE("fan invariants agree with localization at n = 1") {
  std::vector<std::pair<ToricSurface, EqLineBundle>> cases;
  for (std::int64_t m = -3; m <= 3; ++m) cases.emplace_back(projective_plane(), plane_bundle(m));
  for (std::int64_t a = 0; a <= 2; ++a)
    for (std::int64_t x = -3; x <= 3; ++x)
      for (std::int64_t y = -3; y <= 3; y += 2) cases.emplace_back(hirzebruch(a), hirzebruch_bundle(x, y));
  for (std::int64_t a = -2; a <= 2; ++a)
    for (std::int64_t d = 0; d <= 3; ++d)
      for (std::int64_t k = 0; k <= 1; ++k)
        cases.emplace_back(ToricSurface::total_space(a), total_space_bundle(d, k));
  for (const auto& [s, m] : cases) {
    auto inv = intersection_numbers(s, m);
    CHECK(integrate(AssignmentKind::T, s, m, 1) == delta(inv));
    CHECK(integrate(AssignmentKind::L, s, m, 1) == inv.M2);
    CHECK(integrate(AssignmentKind::Seg, s, m, 1) == inv.M2);
  }
}

TEST_CASE("general ray coefficients on a total space") {
  ToricSurface t = ToricSurface::total_space(2);
  EqLineBundle m{{1, 1, 2}, LinForm{0, 0, -1}};
  auto data = total_space_data(t, m);
  CHECK(data.d == 1 + 2 + 2);
  CHECK(data.fiber_weight == 0);
  EqLineBundle same = total_space_bundle(5, 0);
  for (int n = 1; n <= 3; ++n)
    CHECK(integrate(AssignmentKind::T, t, m, n) == integrate(AssignmentKind::T, t, same, n));
}
