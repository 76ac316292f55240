#pragma once

#include <vector>

#include "hilbloc/qseries.hpp"
#include "hilbloc/rational.hpp"
#include "hilbloc/toric.hpp"

namespace hilbloc {

struct DivisorData {
  BigRational C2;
  BigRational MC;
  BigRational eC{2};
};

struct RelativeGeometry {
  BigRational M2, MK, K2, e;
  std::vector<DivisorData> divisors;  // disjoint components; eC must be even
};

RelativeGeometry relative_geometry(const SurfaceInvariants& inv);

struct RuledData {
  BigRational g;
  BigRational l0;  // pi^*L . C0
  BigRational mf;  // M . f
  BigRational m0;  // M . C0
};

BigRational delta(const SurfaceInvariants& inv);
BigRational delta(const BigRational& M2, const BigRational& MK, const BigRational& e);
// Throws InvalidGeometry when some eC is odd.
BigRational eta(const RelativeGeometry& rel);
BigRational epsilon(const RuledData& r);
BigRational epsilon_tilde(const RuledData& r);

QSeries relative_series(const QSeries& z_abs, const QSeries& z_normal);
// Iterated division by the normal series of each component.
QSeries relative_series(const QSeries& z_abs, const std::vector<QSeries>& z_normals);
QSeries rubber_ratio(const QSeries& z_inf, const QSeries& z_zero);

struct DegenerationResult {
  bool ok;
  int first_difference;  // -1 when ok
};

DegenerationResult degeneration_check(const QSeries& z_s, const QSeries& z_rel, const QSeries& z_ruled_rel);

// eta(P^2, C_d, O(1)) = d^2 - 4d + 7.
BigRational dt_exponent(std::int64_t d);
QSeries dt_series(std::int64_t d, int order);

}  // namespace hilbloc
