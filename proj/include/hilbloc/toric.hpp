#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hilbloc/linform.hpp"

namespace hilbloc {

using Ray = std::array<std::int64_t, 2>;

struct FixedChart {
  int ray1;
  int ray2;
  LinForm w1;  // weight of the coordinate cutting out D_{ray1}
  LinForm w2;
};

enum class SurfaceModel { complete, line_bundle_total_space };

// Smooth toric surface given by its fan. Lattice characters (x, y) are sent
// to x*ex + y*ey; complete surfaces use (t1, t2), total spaces (t1, t).
class ToricSurface {
 public:
  // Complete surface from a cyclic ray list; throws InvalidGeometry.
  static ToricSurface from_rays(std::vector<Ray> rays, std::string name = "custom");

  // Tot(O_P1(a)) with rays (-1,0), (0,-1) [zero section], (1,a) and the two
  // cones through the zero section.
  static ToricSurface total_space(std::int64_t a);

  const std::string& name() const { return name_; }
  SurfaceModel model() const { return model_; }
  bool complete() const { return model_ == SurfaceModel::complete; }
  const std::vector<Ray>& rays() const { return rays_; }
  const std::vector<FixedChart>& charts() const { return charts_; }
  std::int64_t total_space_degree() const { return tot_a_; }
  // Ray index of the zero section on total spaces.
  static constexpr int kZeroSectionRay = 1;

  LinForm character(std::int64_t x, std::int64_t y) const { return x * ex_ + y * ey_; }

  // D_i^2 on complete surfaces, C^2 for the zero section of a total space.
  std::int64_t self_intersection(int ray) const;

 private:
  ToricSurface() = default;
  void build_charts(const std::vector<std::pair<int, int>>& cones);

  std::string name_;
  SurfaceModel model_ = SurfaceModel::complete;
  std::vector<Ray> rays_;
  std::vector<FixedChart> charts_;
  LinForm ex_ = kT1;
  LinForm ey_ = kT2;
  std::int64_t tot_a_ = 0;
};

ToricSurface projective_plane();
ToricSurface p1_x_p1();
ToricSurface hirzebruch(std::int64_t a);

// sum_i a_i D_i, with the equivariant structure twisted by a character.
struct EqLineBundle {
  std::vector<std::int64_t> ray_coeffs;
  LinForm character{};
};

EqLineBundle trivial_bundle(const ToricSurface& s);
// O(m) on P^2 (m times the first ray divisor).
EqLineBundle plane_bundle(std::int64_t m);
// O(x, y) on P1 x P1.
EqLineBundle p1p1_bundle(std::int64_t x, std::int64_t y);
// x*C0 + y*f on hirzebruch(a), C0 the negative section.
EqLineBundle hirzebruch_bundle(std::int64_t x, std::int64_t y);
// pi^*O(d) on Tot(O_P1(a)); fiber_weight shifts every chart by that multiple of t.
EqLineBundle total_space_bundle(std::int64_t d, std::int64_t fiber_weight = 0);

// The unique mu with <mu, v_i> = -a_i on both rays of the chart, plus the character.
LinForm bundle_weight_at(const ToricSurface& s, const EqLineBundle& m, int chart);

struct SurfaceInvariants {
  std::int64_t M2 = 0;
  std::int64_t MK = 0;
  std::int64_t K2 = 0;
  std::int64_t e = 0;
  bool relative = false;
  std::int64_t C2 = 0;
  std::int64_t MC = 0;
  std::int64_t eC = 2;
};

// Classical numbers for complete surfaces, residue numbers for total spaces.
// relative_ray names an invariant curve C = D_ray.
SurfaceInvariants intersection_numbers(const ToricSurface& s, const EqLineBundle& m,
                                       std::optional<int> relative_ray = std::nullopt);

// Degree of M on the zero section and its fiber weight, for total spaces.
struct TotalSpaceData {
  std::int64_t a;
  std::int64_t d;
  std::int64_t fiber_weight;
};
TotalSpaceData total_space_data(const ToricSurface& s, const EqLineBundle& m);

}  // namespace hilbloc
