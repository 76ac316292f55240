#include "hilbloc/identities.hpp"

#include <stdexcept>

#include "hilbloc/errors.hpp"

namespace hilbloc {

RelativeGeometry relative_geometry(const SurfaceInvariants& inv) {
  RelativeGeometry r{inv.M2, inv.MK, inv.K2, inv.e, {}};
  if (inv.relative) r.divisors.push_back({inv.C2, inv.MC, inv.eC});
  return r;
}

BigRational delta(const BigRational& M2, const BigRational& MK, const BigRational& e) { return e - MK + M2; }

BigRational delta(const SurfaceInvariants& inv) {
  return delta(BigRational(inv.M2), BigRational(inv.MK), BigRational(inv.e));
}

BigRational eta(const RelativeGeometry& rel) {
  BigRational x = delta(rel.M2, rel.MK, rel.e);
  for (const auto& d : rel.divisors) {
    if (d.eC.get_den() != 1 || d.eC.get_num() % 2 != 0)
      throw InvalidGeometry("e(C) = " + to_string(d.eC) + " is not of the form 2 - 2g");
    x -= d.eC + d.MC;
  }
  return x;
}

BigRational epsilon(const RuledData& r) {
  BigRational chi = 2 - 2 * r.g;
  return r.mf * r.mf * r.l0 + (1 + 2 * r.mf) * r.m0 + (1 + r.mf) * chi;
}

BigRational epsilon_tilde(const RuledData& r) {
  BigRational chi = 2 - 2 * r.g;
  return r.mf * r.mf * r.l0 + 2 * r.mf * r.m0 + r.mf * chi;
}

QSeries relative_series(const QSeries& z_abs, const QSeries& z_normal) { return z_abs / z_normal; }

QSeries relative_series(const QSeries& z_abs, const std::vector<QSeries>& z_normals) {
  QSeries r = z_abs;
  for (const auto& z : z_normals) r = r / z;
  return r;
}

QSeries rubber_ratio(const QSeries& z_inf, const QSeries& z_zero) { return z_inf / z_zero; }

DegenerationResult degeneration_check(const QSeries& z_s, const QSeries& z_rel, const QSeries& z_ruled_rel) {
  int k = first_difference(z_s, z_rel * z_ruled_rel);
  return {k < 0, k};
}

BigRational dt_exponent(std::int64_t d) {
  if (d < 0) throw std::invalid_argument("negative degree");
  BigRational x(static_cast<long>(d));
  return x * x - 4 * x + 7;
}

QSeries dt_series(std::int64_t d, int order) { return xi_pow(dt_exponent(d), order); }

}  // namespace hilbloc
