#pragma once

#include <optional>
#include <string>

#include "hilbloc/toric.hpp"

namespace hilbloc {

struct Geometry {
  ToricSurface surface;
  EqLineBundle bundle;
  std::optional<int> relative;
};

// JSON document, either
//   {"rays": [[1,0],[0,1],[-1,-1]], "bundle": [1,0,0], "relative": 0}
// or a named surface
//   {"surface": "hirzebruch", "a": 2, "bundle": [0,1,0,0]}
//   {"surface": "tot", "a": 1, "d": 2, "fiber_weight": 0}
// "bundle" always lists ray coefficients; named surfaces also accept
// "m" (p2), "x"/"y" (p1xp1, hirzebruch) and "d" (tot). Throws InvalidGeometry.
Geometry parse_geometry_spec(const std::string& text);
Geometry load_geometry_spec(const std::string& path);

// surface in {p2, p1xp1, hirzebruch, tot}; bundle is a comma separated list:
// "m" for p2, "x,y" for p1xp1 and hirzebruch (x C0 + y f), "d" or "d,k" for tot.
Geometry named_geometry(const std::string& surface, std::int64_t a, const std::string& bundle,
                        std::optional<int> relative = std::nullopt);

}  // namespace hilbloc
