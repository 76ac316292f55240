#include "hilbloc/geometry_spec.hpp"

#include <fstream>
#include <sstream>

#include "hilbloc/errors.hpp"
#include "json.hpp"

namespace hilbloc {

namespace {

using nlohmann::json;

std::vector<std::int64_t> parse_int_list(const std::string& s) {
  std::vector<std::int64_t> out;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoll(item, &used));
      if (item.find_first_not_of(" \t", used) != std::string::npos) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw InvalidGeometry("bad bundle entry '" + item + "'");
    }
  }
  return out;
}

Geometry make_named(const std::string& name, std::int64_t a, const std::vector<std::int64_t>& b,
                    std::optional<int> relative) {
  auto need = [&](std::size_t lo, std::size_t hi) {
    if (b.size() < lo || b.size() > hi)
      throw InvalidGeometry("surface " + name + " takes " + std::to_string(lo) +
                            (hi > lo ? "-" + std::to_string(hi) : "") + " bundle numbers");
  };
  if (name == "p2") {
    need(1, 1);
    return {projective_plane(), plane_bundle(b[0]), relative};
  }
  if (name == "p1xp1") {
    need(2, 2);
    return {p1_x_p1(), p1p1_bundle(b[0], b[1]), relative};
  }
  if (name == "hirzebruch") {
    need(2, 2);
    return {hirzebruch(a), hirzebruch_bundle(b[0], b[1]), relative};
  }
  if (name == "tot") {
    need(1, 2);
    return {ToricSurface::total_space(a), total_space_bundle(b[0], b.size() > 1 ? b[1] : 0),
            relative.value_or(ToricSurface::kZeroSectionRay)};
  }
  throw InvalidGeometry("unknown surface '" + name + "' (expected p2, p1xp1, hirzebruch, tot)");
}

void check_relative(const Geometry& g) {
  if (!g.relative) return;
  int r = *g.relative;
  if (r < 0 || r >= static_cast<int>(g.surface.rays().size()))
    throw InvalidGeometry("relative ray " + std::to_string(r) + " out of range");
  if (!g.surface.complete() && r != ToricSurface::kZeroSectionRay)
    throw InvalidGeometry("only the zero section of a total space is compact");
}

}  // namespace

Geometry parse_geometry_spec(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InvalidGeometry(std::string("geometry spec is not valid JSON: ") + e.what());
  }
  try {
    std::optional<int> relative;
    if (j.contains("relative")) relative = j.at("relative").get<int>();
    Geometry g{projective_plane(), {}, relative};
    if (j.contains("rays")) {
      std::vector<Ray> rays;
      for (const auto& r : j.at("rays")) {
        if (r.size() != 2) throw InvalidGeometry("each ray needs two coordinates");
        rays.push_back({r[0].get<std::int64_t>(), r[1].get<std::int64_t>()});
      }
      g.surface = ToricSurface::from_rays(std::move(rays));
      g.bundle.ray_coeffs = j.value("bundle", std::vector<std::int64_t>(g.surface.rays().size(), 0));
    } else if (j.contains("surface")) {
      std::string name = j.at("surface").get<std::string>();
      std::int64_t a = j.value("a", std::int64_t{0});
      std::int64_t x = j.value("x", std::int64_t{0}), y = j.value("y", std::int64_t{0});
      std::vector<std::int64_t> b = {x, y};
      if (name == "p2") b = {j.value("m", std::int64_t{0})};
      if (name == "tot") b = {j.value("d", std::int64_t{0}), j.value("fiber_weight", std::int64_t{0})};
      g = make_named(name, a, b, relative);
      if (j.contains("bundle")) g.bundle.ray_coeffs = j.at("bundle").get<std::vector<std::int64_t>>();
    } else {
      throw InvalidGeometry("geometry spec needs \"rays\" or \"surface\"");
    }
    if (g.bundle.ray_coeffs.size() != g.surface.rays().size())
      throw InvalidGeometry("bundle needs " + std::to_string(g.surface.rays().size()) + " ray coefficients");
    check_relative(g);
    return g;
  } catch (const json::exception& e) {
    throw InvalidGeometry(std::string("malformed geometry spec: ") + e.what());
  }
}

Geometry load_geometry_spec(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidGeometry("cannot read geometry spec '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_geometry_spec(buf.str());
}

Geometry named_geometry(const std::string& surface, std::int64_t a, const std::string& bundle,
                        std::optional<int> relative) {
  Geometry g = make_named(surface, a, parse_int_list(bundle), relative);
  check_relative(g);
  return g;
}

}  // namespace hilbloc
