#include "doctest.h"
#include "hilbloc/errors.hpp"
#include "hilbloc/identities.hpp"
#include "hilbloc/localize.hpp"

using namespace hilbloc;

namespace {

BigRational q(long p, long d = 1) { return make_rational(p, d); }

// Lehn's generating function, coefficients of z^2 and z^3.
BigRational lehn2(const SurfaceInvariants& s) {
  BigRational H2(s.M2), HK(s.MK), K2(s.K2), e(s.e);
  return H2 * H2 / 2 - 5 * H2 - 5 * HK / 2 - K2 / 2 + e / 2;
}

BigRational lehn3(const SurfaceInvariants& s) {
  BigRational H2(s.M2), HK(s.MK), K2(s.K2), e(s.e);
  return H2 * H2 * H2 / 6 - 5 * H2 * H2 - 5 * H2 * HK / 2 - H2 * K2 / 2 + H2 * e / 2 + q(112, 3) * H2 +
         32 * HK + q(28, 3) * K2 - q(20, 3) * e;
}

ToricSurface rotated(const ToricSurface& s, int k) {
  std::vector<Ray> r = s.rays();
  std::rotate(r.begin(), r.begin() + k, r.end());
  return ToricSurface::from_rays(r);
}

}  // namespace

TEST_CASE("fixed point tuples") {
  CHECK(fixed_point_tuples(3, 0).size() == 1);
  CHECK(fixed_point_tuples(3, 2).size() == 9);
  CHECK(fixed_point_tuples(4, 3).size() == 40);
  for (const auto& t : fixed_point_tuples(3, 4)) {
    int n = 0;
    for (const auto& p : t) n += p.size();
    CHECK(n == 4);
  }
}

TEST_CASE("contribution examples") {
  ToricSurface p2 = projective_plane();
  for (const auto& t : fixed_point_tuples(3, 3))
    CHECK(contribution(AssignmentKind::T, t, p2, trivial_bundle(p2)) == RatFunc(BigRational(1)));
  FixedPointTuple one{Partition({1}), Partition(), Partition()};
  const FixedChart& c = p2.charts()[0];
  LinForm mu = bundle_weight_at(p2, plane_bundle(2), 0);
  MPoly m = MPoly::from_linform(mu);
  RatFunc expect(m * m, MPoly::from_linform(c.w1) * MPoly::from_linform(c.w2));
  CHECK(contribution(AssignmentKind::L, one, p2, plane_bundle(2)) == expect);
}

TEST_CASE("integrate examples") {
  ToricSurface p2 = projective_plane();
  CHECK(integrate(AssignmentKind::T, p2, trivial_bundle(p2), 1) == 3);
  CHECK(integrate(AssignmentKind::T, p2, plane_bundle(1), 1) == 7);
  CHECK(integrate(AssignmentKind::Seg, p2, plane_bundle(1), 1) == 1);
  for (std::int64_t a = -2; a <= 2; ++a)
    CHECK(integrate(AssignmentKind::T, ToricSurface::total_space(a), total_space_bundle(0), 1) == 2);
  CHECK(integrate(AssignmentKind::T, ToricSurface::total_space(1), total_space_bundle(1), 1) == 3);
}

TEST_CASE("series examples") {
  ToricSurface p2 = projective_plane();
  CHECK(series(AssignmentKind::T, p2, trivial_bundle(p2), 3) == xi_pow(q(3), 3));
  CHECK(series(AssignmentKind::T, p1_x_p1(), trivial_bundle(p1_x_p1()), 2) == QSeries(2, {q(1), q(4), q(14)}));
  CHECK(series(AssignmentKind::Seg, p2, plane_bundle(3), 0) == QSeries(0));
  CHECK(series(AssignmentKind::T, p2, plane_bundle(1), 3) == xi_pow(q(7), 3));
}

TEST_CASE("T with the trivial bundle counts fixed points") {
  for (const auto& s : {projective_plane(), p1_x_p1(), hirzebruch(1), hirzebruch(2)}) {
    int top = s.charts().size() == 3 ? 4 : 3;
    for (int n = 0; n <= top; ++n) {
      auto r = integrate_detailed(AssignmentKind::T, s, trivial_bundle(s), n);
      CHECK(r.value == static_cast<long>(r.fixed_points));
      CHECK(r.used.size() == 2);
    }
  }
}

TEST_CASE("Segre numbers follow Lehn's formula on compact surfaces") {
  std::vector<std::pair<ToricSurface, EqLineBundle>> cases;
  for (std::int64_t m = -2; m <= 2; ++m) cases.emplace_back(projective_plane(), plane_bundle(m));
  for (std::int64_t x = -1; x <= 1; ++x)
    for (std::int64_t y = -1; y <= 2; ++y) cases.emplace_back(hirzebruch(1), hirzebruch_bundle(x, y));
  for (const auto& [s, m] : cases) {
    auto inv = intersection_numbers(s, m);
    CHECK(integrate(AssignmentKind::Seg, s, m, 2) == lehn2(inv));
    CHECK(integrate(AssignmentKind::Seg, s, m, 3) == lehn3(inv));
  }
}

TEST_CASE("Segre numbers on total spaces at n = 2") {
  for (std::int64_t a = -2; a <= 2; ++a)
    for (std::int64_t d = 0; d <= 2; ++d) {
      auto inv = intersection_numbers(ToricSurface::total_space(a), total_space_bundle(d));
      CHECK(integrate(AssignmentKind::Seg, ToricSurface::total_space(a), total_space_bundle(d), 2) ==
            lehn2(inv));
    }
}

TEST_CASE("symbolic and expanded routes agree") {
  std::vector<std::pair<ToricSurface, EqLineBundle>> cases = {
      {projective_plane(), plane_bundle(1)},
      {hirzebruch(1), hirzebruch_bundle(1, 1)},
      {ToricSurface::total_space(1), total_space_bundle(1)},
      {ToricSurface::total_space(-1), total_space_bundle(2, 1)},
  };
  for (const auto& [s, m] : cases)
    for (auto kind : {AssignmentKind::T, AssignmentKind::Seg, AssignmentKind::L})
      for (int n = 1; n <= 2; ++n) {
        RatFunc sym = integrate_symbolic(kind, s, m, n);
        if (s.complete()) CHECK(sym.is_constant());
        for (const auto& dir : {default_directions()[1], default_directions()[2]})
          CHECK(rf_value_at_zero(rf_specialize(sym, dir)) == integrate(kind, s, m, n));
      }
}

TEST_CASE("relabeling the fan does not change integrals") {
  ToricSurface h = hirzebruch(2);
  EqLineBundle m = hirzebruch_bundle(1, 2);
  for (int k = 1; k < 4; ++k) {
    EqLineBundle r = m;
    std::rotate(r.ray_coeffs.begin(), r.ray_coeffs.begin() + k, r.ray_coeffs.end());
    for (auto kind : {AssignmentKind::T, AssignmentKind::Seg})
      CHECK(integrate(kind, rotated(h, k), r, 2) == integrate(kind, h, m, 2));
  }
}

TEST_CASE("worker count does not change the result") {
  ToricSurface p2 = projective_plane();
  IntegrateOptions one, many;
  many.workers = 5;
  for (int n = 1; n <= 4; ++n)
    CHECK(integrate(AssignmentKind::Seg, p2, plane_bundle(2), n, one) ==
          integrate(AssignmentKind::Seg, p2, plane_bundle(2), n, many));
}

TEST_CASE("degenerate directions are skipped") {
  // rho = 1 kills the weight t1 - t2 at the second chart of P^2.
  ToricSurface p2 = projective_plane();
  IntegrateOptions opts;
  opts.directions = {{q(1), q(1)}, {q(2), q(1)}, {q(3, 2), q(1)}};
  auto r = integrate_detailed(AssignmentKind::T, p2, trivial_bundle(p2), 2, opts);
  REQUIRE(r.used.size() == 2);
  CHECK(r.used[0].rho == 2);
  CHECK(r.used[1].rho == q(3, 2));
  opts.directions.pop_back();
  CHECK_THROWS_AS(integrate(AssignmentKind::T, p2, trivial_bundle(p2), 2, opts), DegenerateDirection);
}
