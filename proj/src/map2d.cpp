#include "pwt/map2d.hpp"

#include <cmath>

#include "pwt/errors.hpp"

namespace pwt {

namespace {

int wrap_index(int v, int n) {
    int m = v % n;
    return m < 0 ? m + n : m;
}

// dst |= shift(src), with torus wrap or bounds clipping.
void shift_or_into(const GridSet& src, int di, int dj, GridSet& dst) {
    const GridGeometry& g = src.geometry();
    const bool torus = g.wrap == Wrap::torus;
    for (int j = 0; j < g.ny; ++j) {
        for (int i = 0; i < g.nx; ++i) {
            if (!src.test(i, j)) continue;
            int ti = i + di, tj = j + dj;
            if (torus) {
                ti = wrap_index(ti, g.nx);
                tj = wrap_index(tj, g.ny);
            } else if (ti < 0 || ti >= g.nx || tj < 0 || tj >= g.ny) {
                continue;  // unreachable for validated specs
            }
            dst.set(ti, tj);
        }
    }
}

}  // namespace

SnapResult snap_vector(Vec2 v, const GridGeometry& geom) {
    SnapResult s;
    s.di = static_cast<int>(std::floor(v.x / geom.h + 0.5));
    s.dj = static_cast<int>(std::floor(v.y / geom.h + 0.5));
    s.residual = {v.x - s.di * geom.h, v.y - s.dj * geom.h};
    return s;
}

PwtSpec::PwtSpec(const RegionSpec& omega, const std::vector<std::pair<RegionSpec, Vec2>>& branches,
                 const GridGeometry& geom)
    : geom_(geom), domain_(rasterize(omega, geom)) {
    for (const auto& [region, v] : branches) {
        Branch b{rasterize(region, geom) & domain_, v, snap_vector(v, geom)};
        branches_.push_back(std::move(b));
    }
    validate();
}

PwtSpec::PwtSpec(GridSet domain, std::vector<std::pair<GridSet, Vec2>> branches)
    : geom_(domain.geometry()), domain_(std::move(domain)) {
    for (auto& [mask, v] : branches) {
        domain_.require_same_geometry(mask);
        Branch b{mask & domain_, v, snap_vector(v, geom_)};
        branches_.push_back(std::move(b));
    }
    validate();
}

void PwtSpec::validate() {
    if (branches_.empty()) throw ValidationError("PwtSpec: no branches");
    // Cover: every domain cell belongs to at least one branch raster.
    GridSet cover(geom_);
    for (const auto& b : branches_) cover = cover | b.mask;
    if (!domain_.subset_of(cover))
        throw ValidationError("PwtSpec: branch rasters do not cover the domain raster");
    if (geom_.wrap == Wrap::none) {
        for (const auto& b : branches_) {
            GridSet image(geom_);
            shift_or_into(b.mask, b.snap.di, b.snap.dj, image);
            if (!image.subset_of(domain_))
                throw ValidationError("PwtSpec: snapped branch image leaves the domain raster");
            // Clipping must not have dropped cells either.
            if (image.popcount() != b.mask.popcount())
                throw ValidationError("PwtSpec: snapped branch image leaves the grid");
        }
    }
}

GridSet apply_grid(const PwtSpec& spec, const GridSet& k) {
    k.require_same_geometry(spec.domain());
    if (!k.subset_of(spec.domain()))
        throw DomainError("apply_grid: K not contained in the domain raster");
    GridSet out(spec.geometry());
    for (const auto& b : spec.branches()) {
        shift_or_into(k & b.mask, b.snap.di, b.snap.dj, out);
    }
    return out;
}

GridAttractor attractor_grid(const PwtSpec& spec, int cap) {
    if (cap < 1) throw ValidationError("attractor_grid: cap must be >= 1");
    GridSet k = spec.domain();
    std::vector<std::int64_t> trace = {k.popcount()};
    for (int n = 0; n < cap; ++n) {
        GridSet next = apply_grid(spec, k);
        if (!next.subset_of(k))
            throw InternalError("attractor_grid: iterate escaped its predecessor");
        if (next == k)
            return {GridAttractor::Status::stabilized, n, std::move(k), std::move(trace)};
        trace.push_back(next.popcount());
        k = std::move(next);
    }
    return {GridAttractor::Status::cap_reached, cap, std::move(k), std::move(trace)};
}

}  // namespace pwt
