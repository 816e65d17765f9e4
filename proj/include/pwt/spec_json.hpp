#pragma once

#include <string>
#include <utility>
#include <vector>

#include "pwt/itm.hpp"
#include "pwt/torus.hpp"

namespace pwt {

/// 1-D spec, e.g.
///   {"mode": "line", "omega": ["0", "1"],
///    "branches": [{"region": ["0", "1/2"], "vector": "1/4"}, ...]}
/// Rationals are strings "p/q" or integer strings; decimal notation is
/// rejected (exactness contract).
ItmSpec parse_itm_spec(const std::string& text);

/// Region trees are tagged objects:
///   {"type": "rect", "lo": [x, y], "hi": [x, y]}
///   {"type": "disk", "center": [x, y], "radius": r}
///   {"type": "polygon", "vertices": [[x, y], ...]}
///   {"type": "complement", "region": R, "outer": R}
///   {"type": "union" | "intersection", "parts": [R, ...]}
RegionSpec parse_region(const std::string& text);

/// 2-D spec: {"omega": R, "branches": [{"region": R, "vector": [x, y]}, ...],
///            "grid": {"nx": n, "ny": n, "h": h, "wrap": "none"|"torus",
///                     "origin": [x, y]}}
/// Parsed pieces are kept so the same map can be re-rasterized at other
/// resolutions.
struct PwtSpecFile {
    RegionSpec omega;
    std::vector<std::pair<RegionSpec, Vec2>> branches;
    GridGeometry geom;
    PwtSpec build() const { return {omega, branches, geom}; }
};
PwtSpecFile parse_pwt_spec(const std::string& text);

/// Torus double rotation: {"region": R, "v0": [x, y], "v1": [x, y],
///                         "grid": {...}}; wrap is forced to torus.
struct TorusSpecFile {
    RegionSpec region;
    Vec2 v0, v1;
    GridGeometry geom;
    TorusSpec build() const { return {region, v0, v1, geom}; }
};
TorusSpecFile parse_torus_spec(const std::string& text);

}  // namespace pwt
