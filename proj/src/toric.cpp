#include "hilbloc/toric.hpp"

#include <cmath>
#include <numeric>
#include <numbers>

#include "hilbloc/errors.hpp"

namespace hilbloc {

namespace {

std::int64_t det(const Ray& u, const Ray& v) { return u[0] * v[1] - u[1] * v[0]; }

void check_bundle(const ToricSurface& s, const EqLineBundle& m) {
  if (m.ray_coeffs.size() != s.rays().size())
    throw InvalidGeometry("bundle has " + std::to_string(m.ray_coeffs.size()) + " coefficients for " +
                          std::to_string(s.rays().size()) + " rays");
}

}  // namespace

void ToricSurface::build_charts(const std::vector<std::pair<int, int>>& cones) {
  charts_.clear();
  for (auto [i, j] : cones) {
    const Ray& u = rays_[i];
    const Ray& v = rays_[j];
    std::int64_t d = det(u, v);
    if (d != 1 && d != -1)
      throw InvalidGeometry("cone (" + std::to_string(i) + "," + std::to_string(j) + ") is not unimodular");
    // Rows of -V^{-1}, V = [u v] as columns.
    LinForm w1 = character(-v[1] * d, v[0] * d);
    LinForm w2 = character(u[1] * d, -u[0] * d);
    charts_.push_back({i, j, w1, w2});
  }
}

ToricSurface ToricSurface::from_rays(std::vector<Ray> rays, std::string name) {
  if (rays.size() < 3) throw InvalidGeometry("a complete fan needs at least three rays");
  ToricSurface s;
  s.name_ = std::move(name);
  s.rays_ = std::move(rays);
  std::size_t k = s.rays_.size();
  double turn = 0;
  for (std::size_t i = 0; i < k; ++i) {
    const Ray& u = s.rays_[i];
    const Ray& v = s.rays_[(i + 1) % k];
    if (std::gcd(u[0], u[1]) != 1) throw InvalidGeometry("ray " + std::to_string(i) + " is not primitive");
    if (det(u, v) != 1)
      throw InvalidGeometry("rays " + std::to_string(i) + "," + std::to_string((i + 1) % k) +
                            " are not a counterclockwise unimodular pair");
    turn += std::atan2(static_cast<double>(det(u, v)),
                       static_cast<double>(u[0] * v[0] + u[1] * v[1]));
  }
  if (std::abs(turn - 2 * std::numbers::pi) > 1e-6)
    throw InvalidGeometry("rays wind around the origin more than once");
  std::vector<std::pair<int, int>> cones;
  for (std::size_t i = 0; i < k; ++i) cones.emplace_back(static_cast<int>(i), static_cast<int>((i + 1) % k));
  s.build_charts(cones);
  return s;
}

ToricSurface ToricSurface::total_space(std::int64_t a) {
  ToricSurface s;
  s.name_ = "tot(" + std::to_string(a) + ")";
  s.model_ = SurfaceModel::line_bundle_total_space;
  s.rays_ = {Ray{-1, 0}, Ray{0, -1}, Ray{1, a}};
  s.ex_ = kT1;
  s.ey_ = kFiber;
  s.tot_a_ = a;
  s.build_charts({{0, 1}, {1, 2}});
  return s;
}

std::int64_t ToricSurface::self_intersection(int ray) const {
  if (!complete()) {
    if (ray != kZeroSectionRay) throw InvalidGeometry("only the zero section is compact");
    return tot_a_;
  }
  std::size_t k = rays_.size();
  const Ray& v = rays_[ray];
  const Ray& p = rays_[(ray + k - 1) % k];
  const Ray& n = rays_[(ray + 1) % k];
  Ray s{p[0] + n[0], p[1] + n[1]};
  // s = -D^2 * v
  std::int64_t c = v[0] != 0 ? s[0] / v[0] : s[1] / v[1];
  if (s[0] != c * v[0] || s[1] != c * v[1]) throw InvalidGeometry("fan is not smooth at ray " + std::to_string(ray));
  return -c;
}

ToricSurface projective_plane() { return ToricSurface::from_rays({{1, 0}, {0, 1}, {-1, -1}}, "p2"); }
ToricSurface p1_x_p1() { return ToricSurface::from_rays({{1, 0}, {0, 1}, {-1, 0}, {0, -1}}, "p1xp1"); }
ToricSurface hirzebruch(std::int64_t a) {
  if (a < 0) throw InvalidGeometry("hirzebruch index must be nonnegative");
  return ToricSurface::from_rays({{1, 0}, {0, 1}, {-1, a}, {0, -1}}, "hirzebruch(" + std::to_string(a) + ")");
}

EqLineBundle trivial_bundle(const ToricSurface& s) { return {std::vector<std::int64_t>(s.rays().size(), 0), {}}; }
EqLineBundle plane_bundle(std::int64_t m) { return {{m, 0, 0}, {}}; }
EqLineBundle p1p1_bundle(std::int64_t x, std::int64_t y) { return {{x, y, 0, 0}, {}}; }
EqLineBundle hirzebruch_bundle(std::int64_t x, std::int64_t y) { return {{y, x, 0, 0}, {}}; }
EqLineBundle total_space_bundle(std::int64_t d, std::int64_t fiber_weight) {
  return {{d, 0, 0}, fiber_weight * kFiber};
}

LinForm bundle_weight_at(const ToricSurface& s, const EqLineBundle& m, int chart) {
  check_bundle(s, m);
  const FixedChart& c = s.charts().at(chart);
  return m.ray_coeffs[c.ray1] * c.w1 + m.ray_coeffs[c.ray2] * c.w2 + m.character;
}

TotalSpaceData total_space_data(const ToricSurface& s, const EqLineBundle& m) {
  if (s.complete()) throw InvalidGeometry("not a line bundle total space");
  check_bundle(s, m);
  std::int64_t a = s.total_space_degree();
  const auto& x = m.ray_coeffs;
  return {a, x[0] + x[2] + a * x[1], x[1] + m.character.c};
}

SurfaceInvariants intersection_numbers(const ToricSurface& s, const EqLineBundle& m,
                                       std::optional<int> relative_ray) {
  check_bundle(s, m);
  SurfaceInvariants inv;
  if (!s.complete()) {
    auto [a, d, k] = total_space_data(s, m);
    inv.M2 = 2 * d * k - a * k * k;
    inv.MK = -d - 2 * k;
    inv.K2 = 4 + a;
    inv.e = 2;
    if (relative_ray) {
      if (*relative_ray != ToricSurface::kZeroSectionRay) throw InvalidGeometry("only the zero section is compact");
      inv.relative = true;
      inv.C2 = a;
      inv.MC = d;
    }
    return inv;
  }
  std::size_t k = s.rays().size();
  std::vector<std::int64_t> self(k);
  for (std::size_t i = 0; i < k; ++i) self[i] = s.self_intersection(static_cast<int>(i));
  auto dot = [&](const std::vector<std::int64_t>& x, const std::vector<std::int64_t>& y) {
    std::int64_t r = 0;
    for (std::size_t i = 0; i < k; ++i) {
      r += x[i] * y[i] * self[i];
      r += x[i] * y[(i + 1) % k] + x[(i + 1) % k] * y[i];
    }
    return r;
  };
  std::vector<std::int64_t> K(k, -1);
  inv.M2 = dot(m.ray_coeffs, m.ray_coeffs);
  inv.MK = dot(m.ray_coeffs, K);
  inv.K2 = dot(K, K);
  inv.e = static_cast<std::int64_t>(k);
  if (relative_ray) {
    if (*relative_ray < 0 || *relative_ray >= static_cast<int>(k)) throw InvalidGeometry("relative ray out of range");
    std::vector<std::int64_t> C(k, 0);
    C[*relative_ray] = 1;
    inv.relative = true;
    inv.C2 = self[*relative_ray];
    inv.MC = dot(m.ray_coeffs, C);
  }
  return inv;
}

}  // namespace hilbloc
