#pragma once

#include <cstdint>
#include <vector>

#include "pwt/grid.hpp"

namespace pwt {

/// Per-cell Euclidean distance to a source set, exact: squared distances are
/// computed in integer cell units (wrapped metric when the geometry is a
/// torus) and converted to physical lengths only on read-out.
class DistanceField {
public:
    DistanceField(GridGeometry g, std::vector<std::int64_t> sq)
        : geom_(g), sq_(std::move(sq)) {}

    const GridGeometry& geometry() const { return geom_; }
    std::int64_t squared_cells(int i, int j) const {
        return sq_[static_cast<std::size_t>(j) * geom_.nx + i];
    }
    double at(int i, int j) const;  // physical units

private:
    GridGeometry geom_;
    std::vector<std::int64_t> sq_;
};

/// Exact Euclidean distance transform (two-pass parabolic envelope, integer
/// arithmetic throughout). Throws DomainError on an empty source set.
DistanceField distance_transform(const GridSet& x);

/// sup over cells of X of the distance to Y; physical units.
double directed_hausdorff(const GridSet& x, const GridSet& y);

/// max of the two directed distances.
double hausdorff(const GridSet& x, const GridSet& y);

/// Cells within physical distance eps of X.
GridSet epsilon_neighborhood(const GridSet& x, double eps);

}  // namespace pwt
