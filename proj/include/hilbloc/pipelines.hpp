#pragma once

#include "hilbloc/geometry_spec.hpp"
#include "hilbloc/identities.hpp"
#include "hilbloc/localize.hpp"

namespace hilbloc {

// Z(S/C) = Z(S) / Z(N) with N = Tot(O_P1(C^2)) carrying pi^*O(M.C).
struct RelativeRun {
  SurfaceInvariants inv;
  QSeries z_abs;
  QSeries z_normal;
  QSeries z_rel;
  BigRational eta;
  QSeries closed_form;  // xi_pow(eta)
};

RelativeRun relative_pipeline(AssignmentKind kind, const Geometry& g, int order, const IntegrateOptions& opts = {});

// Ratio of the lifts with fiber weights mf and 0 on Tot(O_P1(a)), pi^*O(d).
struct RubberRun {
  RuledData ruled;
  QSeries z_inf;
  QSeries z_zero;
  QSeries ratio;
  BigRational eps_tilde;
  QSeries closed_form;  // xi_pow(eps_tilde)
};

RubberRun rubber_pipeline(std::int64_t a, std::int64_t d, std::int64_t mf, int order,
                          const IntegrateOptions& opts = {});

}  // namespace hilbloc
