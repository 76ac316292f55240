#include "hilbloc/pipelines.hpp"

#include "hilbloc/errors.hpp"

namespace hilbloc {

RelativeRun relative_pipeline(AssignmentKind kind, const Geometry& g, int order, const IntegrateOptions& opts) {
  if (!g.relative) throw InvalidGeometry("relative computation needs a relative divisor");
  if (!g.surface.complete()) throw InvalidGeometry("relative computation needs a complete surface");
  RelativeRun r;
  r.inv = intersection_numbers(g.surface, g.bundle, g.relative);
  r.z_abs = series(kind, g.surface, g.bundle, order, opts);
  r.z_normal = series(kind, ToricSurface::total_space(r.inv.C2), total_space_bundle(r.inv.MC), order, opts);
  r.z_rel = relative_series(r.z_abs, r.z_normal);
  r.eta = eta(relative_geometry(r.inv));
  r.closed_form = xi_pow(r.eta, order);
  return r;
}

RubberRun rubber_pipeline(std::int64_t a, std::int64_t d, std::int64_t mf, int order, const IntegrateOptions& opts) {
  RubberRun r;
  ToricSurface t = ToricSurface::total_space(a);
  r.ruled = {BigRational(0), BigRational(-a), BigRational(mf), BigRational(d)};
  r.z_inf = series(AssignmentKind::T, t, total_space_bundle(d, mf), order, opts);
  r.z_zero = series(AssignmentKind::T, t, total_space_bundle(d, 0), order, opts);
  r.ratio = rubber_ratio(r.z_inf, r.z_zero);
  r.eps_tilde = epsilon_tilde(r.ruled);
  r.closed_form = xi_pow(r.eps_tilde, order);
  return r;
}

}  // namespace hilbloc
