#include "pwt/region.hpp"

#include <cmath>

#include "pwt/errors.hpp"

namespace pwt {

namespace {

double cross(Vec2 o, Vec2 a, Vec2 b) {
    return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

bool on_segment(Vec2 a, Vec2 b, Vec2 p) {
    return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) &&
           std::min(a.y, b.y) <= p.y && p.y <= std::max(a.y, b.y);
}

// Proper or improper intersection of closed segments.
bool segments_intersect(Vec2 a, Vec2 b, Vec2 c, Vec2 d) {
    double d1 = cross(c, d, a);
    double d2 = cross(c, d, b);
    double d3 = cross(a, b, c);
    double d4 = cross(a, b, d);
    if (((d1 > 0 && d2 < 0) || (d1 < 0 && d2 > 0)) &&
        ((d3 > 0 && d4 < 0) || (d3 < 0 && d4 > 0)))
        return true;
    if (d1 == 0 && on_segment(c, d, a)) return true;
    if (d2 == 0 && on_segment(c, d, b)) return true;
    if (d3 == 0 && on_segment(a, b, c)) return true;
    if (d4 == 0 && on_segment(a, b, d)) return true;
    return false;
}

}  // namespace

RegionSpec RegionSpec::rect(Vec2 lo, Vec2 hi) {
    if (!(lo.x < hi.x && lo.y < hi.y))
        throw ValidationError("RegionSpec: rect requires lo < hi componentwise");
    RegionSpec r;
    r.kind_ = Kind::rect;
    r.a_ = lo;
    r.b_ = hi;
    return r;
}

RegionSpec RegionSpec::disk(Vec2 center, double radius) {
    if (!(radius > 0.0)) throw ValidationError("RegionSpec: disk radius must be positive");
    RegionSpec r;
    r.kind_ = Kind::disk;
    r.a_ = center;
    r.r_ = radius;
    return r;
}

RegionSpec RegionSpec::polygon(std::vector<Vec2> ccw_vertices) {
    const std::size_t n = ccw_vertices.size();
    if (n < 3) throw ValidationError("RegionSpec: polygon needs at least 3 vertices");
    double area2 = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        Vec2 p = ccw_vertices[i], q = ccw_vertices[(i + 1) % n];
        area2 += p.x * q.y - q.x * p.y;
    }
    if (!(area2 > 0.0))
        throw ValidationError("RegionSpec: polygon vertices must be counter-clockwise");
    for (std::size_t i = 0; i < n; ++i) {
        if (cross(ccw_vertices[i], ccw_vertices[(i + 1) % n], ccw_vertices[(i + 2) % n]) < 0.0)
            throw ValidationError("RegionSpec: polygon must be convex");
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            // Skip adjacent edges (they share a vertex).
            if (j == i || (j + 1) % n == i || (i + 1) % n == j) continue;
            if (segments_intersect(ccw_vertices[i], ccw_vertices[(i + 1) % n], ccw_vertices[j],
                                   ccw_vertices[(j + 1) % n]))
                throw ValidationError("RegionSpec: polygon is self-intersecting");
        }
    }
    RegionSpec r;
    r.kind_ = Kind::polygon;
    r.verts_ = std::move(ccw_vertices);
    return r;
}

RegionSpec RegionSpec::complement_within(RegionSpec inner, RegionSpec outer) {
    RegionSpec r;
    r.kind_ = Kind::complement;
    r.kids_.push_back(std::move(inner));
    r.kids_.push_back(std::move(outer));
    return r;
}

RegionSpec RegionSpec::union_of(std::vector<RegionSpec> parts) {
    if (parts.empty()) throw ValidationError("RegionSpec: union of nothing");
    RegionSpec r;
    r.kind_ = Kind::union_;
    r.kids_ = std::move(parts);
    return r;
}

RegionSpec RegionSpec::intersection_of(std::vector<RegionSpec> parts) {
    if (parts.empty()) throw ValidationError("RegionSpec: intersection of nothing");
    RegionSpec r;
    r.kind_ = Kind::intersection;
    r.kids_ = std::move(parts);
    return r;
}

bool RegionSpec::contains(Vec2 p) const {
    switch (kind_) {
        case Kind::rect:
            return a_.x <= p.x && p.x <= b_.x && a_.y <= p.y && p.y <= b_.y;
        case Kind::disk: {
            double dx = p.x - a_.x, dy = p.y - a_.y;
            return dx * dx + dy * dy <= r_ * r_;
        }
        case Kind::polygon: {
            // Convex CCW polygon, closed: inside iff never strictly right of an edge.
            const std::size_t n = verts_.size();
            for (std::size_t i = 0; i < n; ++i) {
                if (cross(verts_[i], verts_[(i + 1) % n], p) < 0.0) return false;
            }
            return true;
        }
        case Kind::complement:
            return kids_[1].contains(p) && !kids_[0].contains(p);
        case Kind::union_:
            for (const auto& k : kids_) {
                if (k.contains(p)) return true;
            }
            return false;
        case Kind::intersection:
            for (const auto& k : kids_) {
                if (!k.contains(p)) return false;
            }
            return true;
    }
    return false;
}

GridSet rasterize(const RegionSpec& region, const GridGeometry& geom) {
    GridSet out(geom);
    for (int j = 0; j < geom.ny; ++j) {
        for (int i = 0; i < geom.nx; ++i) {
            if (region.contains({geom.cx(i), geom.cy(j)})) out.set(i, j);
        }
    }
    return out;
}

}  // namespace pwt
