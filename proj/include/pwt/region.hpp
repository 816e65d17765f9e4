#pragma once

#include <memory>
#include <vector>

#include "pwt/grid.hpp"

namespace pwt {

struct Vec2 {
    double x = 0.0;
    double y = 0.0;
    bool operator==(const Vec2&) const = default;
};

/// Closed region of the plane built from primitives and set combinators.
/// Membership is closed for primitives (boundary points are inside);
/// complement_within means set difference outer \ inner.
class RegionSpec {
public:
    enum class Kind { rect, disk, polygon, complement, union_, intersection };

    static RegionSpec rect(Vec2 lo, Vec2 hi);
    static RegionSpec disk(Vec2 center, double radius);
    static RegionSpec polygon(std::vector<Vec2> ccw_vertices);
    static RegionSpec complement_within(RegionSpec inner, RegionSpec outer);
    static RegionSpec union_of(std::vector<RegionSpec> parts);
    static RegionSpec intersection_of(std::vector<RegionSpec> parts);

    Kind kind() const { return kind_; }
    bool contains(Vec2 p) const;

    // Introspection for serialization.
    Vec2 lo() const { return a_; }
    Vec2 hi() const { return b_; }
    Vec2 center() const { return a_; }
    double radius() const { return r_; }
    const std::vector<Vec2>& vertices() const { return verts_; }
    const std::vector<RegionSpec>& children() const { return kids_; }

private:
    RegionSpec() = default;
    Kind kind_ = Kind::rect;
    Vec2 a_, b_;
    double r_ = 0.0;
    std::vector<Vec2> verts_;
    std::vector<RegionSpec> kids_;
};

/// Center-sampling rasterization: cell (i,j) is set iff its center lies in
/// the region. Degenerate (empty) rasters are allowed.
GridSet rasterize(const RegionSpec& region, const GridGeometry& geom);

}  // namespace pwt
