#pragma once

#include <utility>
#include <vector>

#include "pwt/region.hpp"

namespace pwt {

/// Whole-cell offset nearest to v, ties rounded toward +infinity, plus the
/// physical residual v - offset*h (|residual| <= h/2 per component).
struct SnapResult {
    int di = 0;
    int dj = 0;
    Vec2 residual;
};
SnapResult snap_vector(Vec2 v, const GridGeometry& geom);

/// A 2-D piecewise translation at fixed resolution. Branch regions are
/// rasterized and clipped to the domain raster once, translation vectors are
/// snapped to whole-cell offsets, and (for wrap=none) every shifted branch
/// raster is checked to land inside the domain raster. With snapped vectors
/// the map is a genuine piecewise translation of the finite cell set, so
/// monotonicity, invariance and stabilization below are exact, not
/// approximate.
class PwtSpec {
public:
    struct Branch {
        GridSet mask;  // raster(region) ∩ raster(omega)
        Vec2 requested;
        SnapResult snap;
    };

    PwtSpec(const RegionSpec& omega, const std::vector<std::pair<RegionSpec, Vec2>>& branches,
            const GridGeometry& geom);
    /// Mask-level constructor: branch masks are clipped to `domain` here.
    PwtSpec(GridSet domain, std::vector<std::pair<GridSet, Vec2>> branches);

    const GridGeometry& geometry() const { return geom_; }
    const GridSet& domain() const { return domain_; }
    const std::vector<Branch>& branches() const { return branches_; }

private:
    GridGeometry geom_;
    GridSet domain_;
    std::vector<Branch> branches_;
    void validate();
};

/// One application of the map: union over branches of (K ∩ B_i) shifted by
/// the snapped offset. K must live on the spec geometry and inside the domain
/// raster.
GridSet apply_grid(const PwtSpec& spec, const GridSet& k);

struct GridAttractor {
    enum class Status { stabilized, cap_reached };
    Status status;
    int steps;    // stabilization step N, or cap
    GridSet set;  // attractor, or last iterate at cap
    std::vector<std::int64_t> area_trace;  // popcount of each iterate from step 0
    bool stabilized() const { return status == Status::stabilized; }
};

/// Iterates from the domain raster until mask equality or cap applications;
/// containment of each iterate in its predecessor is asserted every step.
GridAttractor attractor_grid(const PwtSpec& spec, int cap);

}  // namespace pwt
