#pragma once

#include "pwt/map2d.hpp"
#include "pwt/rational.hpp"

namespace pwt {

/// Double rotation on the unit 2-torus: points of `region` translate by v0,
/// the rest by v1, everything mod 1. Backed by a two-branch PwtSpec whose
/// branch masks are the region raster and its exact mask complement, so the
/// two branches partition the torus raster by construction.
class TorusSpec {
public:
    TorusSpec(const RegionSpec& region, Vec2 v0, Vec2 v1, const GridGeometry& geom);

    const GridGeometry& geometry() const { return map_.geometry(); }
    const PwtSpec& map() const { return map_; }
    const GridSet& region_mask() const { return map_.branches()[0].mask; }
    Vec2 v0() const { return map_.branches()[0].requested; }
    Vec2 v1() const { return map_.branches()[1].requested; }

private:
    PwtSpec map_;
    static PwtSpec build(const RegionSpec& region, Vec2 v0, Vec2 v1, const GridGeometry& geom);
};

GridSet double_rotation_apply(const TorusSpec& spec, const GridSet& k);

/// K \ f(K): the part of K that is not reached by the map.
GridSet lost_region(const TorusSpec& spec, const GridSet& k);

/// Lattice generated by the difference vectors of a planar map with m = d+1
/// branches; v0 is the rotation vector of the quotient torus.
class LatticeBasis {
public:
    LatticeBasis(Vec2 v0, Vec2 col1, Vec2 col2);  // throws on singular basis

    Vec2 base_vector() const { return v0_; }
    Vec2 column1() const { return {a_, c_}; }
    Vec2 column2() const { return {b_, d_}; }
    /// Coordinates of x in the basis, reduced mod 1 into [0,1)^2.
    Vec2 to_fundamental(Vec2 x) const;
    /// Basis coordinates without the mod-1 reduction.
    Vec2 solve(Vec2 x) const;

private:
    Vec2 v0_;
    double a_, b_, c_, d_;  // column matrix [col1 col2]
    double inv_[4];
};

/// Lattice built from the snapped vectors of a 3-branch planar spec, so the
/// projection lemma is checked against the map actually applied on the grid.
LatticeBasis lattice_from_snapped(const PwtSpec& spec);

/// Each planar set cell center projects to frac(basis^-1 x) in the
/// fundamental domain, then to the containing torus cell (seam cells resolve
/// to the lower image).
GridSet project_to_torus(const GridSet& k, const LatticeBasis& basis,
                         const GridGeometry& torus_geom);

/// Rotation of a torus raster by w in fundamental coordinates, applied per
/// cell center (not snapped): u -> frac(u + w).
GridSet torus_rotate(const GridSet& k, Vec2 w);

/// Hausdorff discrepancy between projecting-after-mapping and
/// rotating-after-projecting; the continuum lemma asserts equality, the grid
/// budget is one torus cell diagonal.
double check_projection_lemma(const PwtSpec& spec, const GridSet& k, const LatticeBasis& basis,
                              const GridGeometry& torus_geom);

struct DependenceResult {
    bool independent;
    std::vector<Rational> certificate;  // nonzero combination summing to zero
};

/// Exact linear (in)dependence of rational vectors over Q. Returns a nonzero
/// rational dependency if one exists; m = d+1 rational vectors are always
/// dependent, so for such inputs this certifies failure of the rational
/// independence hypothesis.
DependenceResult rational_dependence_check(const std::vector<std::vector<Rational>>& vectors);

}  // namespace pwt
