#include <random>

#include "doctest.h"
#include "hilbloc/errors.hpp"
#include "hilbloc/identities.hpp"
#include "hilbloc/localize.hpp"

using namespace hilbloc;

namespace {

BigRational q(long p, long d = 1) { return make_rational(p, d); }

SurfaceInvariants plane(std::int64_t m, bool line = false) {
  return intersection_numbers(projective_plane(), plane_bundle(m), line ? std::optional<int>(0) : std::nullopt);
}

}  // namespace

TEST_CASE("delta") {
  CHECK(delta(plane(0)) == 3);
  for (std::int64_t m = -3; m <= 3; ++m) CHECK(delta(plane(m)) == m * m + 3 * m + 3);
  CHECK(delta(intersection_numbers(p1_x_p1(), p1p1_bundle(1, 1))) == 10);
}

TEST_CASE("eta") {
  for (std::int64_t m = -3; m <= 3; ++m) CHECK(eta(relative_geometry(plane(m, true))) == m * m + 2 * m + 1);
  CHECK(eta(relative_geometry(plane(2))) == delta(plane(2)));
  for (std::int64_t d = 0; d <= 6; ++d) {
    RelativeGeometry r = relative_geometry(plane(1));
    r.divisors.push_back({q(d * d), q(d), q(2 - (d - 1) * (d - 2))});
    CHECK(eta(r) == dt_exponent(d));
    CHECK(eta(r) == d * d - 4 * d + 7);
  }
  RelativeGeometry odd = relative_geometry(plane(1));
  odd.divisors.push_back({q(1), q(1), q(3)});
  CHECK_THROWS_AS(eta(odd), InvalidGeometry);
}

TEST_CASE("eta is additive over disjoint components") {
  RelativeGeometry r{q(5), q(-3), q(8), q(4), {}};
  DivisorData c1{q(1), q(2), q(2)}, c2{q(-1), q(3), q(-2)};
  RelativeGeometry one = r, both = r;
  one.divisors = {c1};
  both.divisors = {c1, c2};
  CHECK(eta(both) - eta(one) == -(c2.eC + c2.MC));
}

TEST_CASE("ruled exponents") {
  std::mt19937 rng(3);
  std::uniform_int_distribution<long> u(-5, 5);
  for (int it = 0; it < 200; ++it) {
    RuledData r{q(std::abs(u(rng))), q(u(rng)), q(u(rng)), q(u(rng), 1 + std::abs(u(rng)))};
    CHECK(epsilon(r) - epsilon_tilde(r) == r.m0 + 2 - 2 * r.g);
    RuledData pulled = r;
    pulled.mf = 0;
    CHECK(epsilon(pulled) == pulled.m0 + 2 - 2 * pulled.g);
    CHECK(epsilon_tilde(pulled) == 0);
  }
}

TEST_CASE("relative_series examples") {
  QSeries z = xi_pow(q(5), 4);
  CHECK(relative_series(z, QSeries(4)) == z);
  CHECK(relative_series(xi_pow(q(3), 4), xi_pow(q(2), 4)) == xi_pow(q(1), 4));
  CHECK(relative_series(xi_pow(q(7), 4), std::vector<QSeries>{xi_pow(q(2), 4), xi_pow(q(1), 4)}) ==
        xi_pow(q(4), 4));
}

TEST_CASE("rubber_ratio examples") {
  QSeries z = xi_pow(q(3, 2), 3);
  CHECK(rubber_ratio(z, z) == QSeries(3));
  CHECK(rubber_ratio(xi_pow(q(4), 3), xi_pow(q(1), 3)) == xi_pow(q(3), 3));
}

TEST_CASE("degeneration_check examples") {
  auto r = degeneration_check(xi_pow(q(3), 4), xi_pow(q(1), 4), xi_pow(q(2), 4));
  CHECK(r.ok);
  CHECK(r.first_difference == -1);
  CHECK(degeneration_check(QSeries(3), QSeries(3), QSeries(3)).ok);
  QSeries bad = xi_pow(q(3), 4);
  bad[2] += 1;
  r = degeneration_check(bad, xi_pow(q(1), 4), xi_pow(q(2), 4));
  CHECK_FALSE(r.ok);
  CHECK(r.first_difference == 2);
}

TEST_CASE("dt_series") {
  CHECK(dt_series(0, 4) == xi_pow(q(7), 4));
  CHECK(dt_series(0, 4)[1] == 7);
  CHECK(dt_exponent(2) == 3);
  CHECK(dt_exponent(3) == 4);
  for (std::int64_t d = 0; d <= 4; ++d) {
    QSeries s = dt_series(d, 6);
    for (int k = 0; k <= 6; ++k) {
      CHECK(s[k].get_den() == 1);
      CHECK(s[k] > 0);
    }
  }
}
