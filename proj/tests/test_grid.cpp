#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "pwt/errors.hpp"
#include "pwt/map2d.hpp"
#include "pwt/rng.hpp"

using pwt::GridGeometry;
using pwt::GridSet;
using pwt::PwtSpec;
using pwt::RegionSpec;
using pwt::Vec2;
using pwt::Wrap;

namespace {

GridGeometry unit_grid(int n, Wrap wrap = Wrap::none) {
    return {0.0, 0.0, 1.0 / n, n, n, wrap};
}

}  // namespace

TEST_CASE("rasterize: unit rect fills the unit grid") {
    GridSet r = rasterize(RegionSpec::rect({0, 0}, {1, 1}), unit_grid(4));
    CHECK(r.popcount() == 16);
}

TEST_CASE("rasterize: small disk catches all four centers") {
    GridSet r = rasterize(RegionSpec::disk({0.5, 0.5}, 0.5), unit_grid(2));
    CHECK(r.popcount() == 4);  // centers at distance sqrt(2)/4 < 1/2
}

TEST_CASE("rasterize: disk cell count approximates its area") {
    GridGeometry g = unit_grid(64);
    GridSet r = rasterize(RegionSpec::disk({0.5, 0.5}, 0.5), g);
    double area = static_cast<double>(r.popcount()) * g.h * g.h;
    double exact = M_PI * 0.25;
    CHECK(std::abs(area - exact) / exact < 0.02);
}

TEST_CASE("rasterize: boundary centers are inside (closed regions)") {
    // Rect [0, 0.5]x[0,1] on an 8-grid: column of centers at x=0.5+... no;
    // centers at x = (i+1/2)/8; 0.5 is not a center. Use lo=1/16 so the first
    // center sits exactly on the boundary.
    GridSet r = rasterize(RegionSpec::rect({0.0625, 0.0625}, {1, 1}), unit_grid(8));
    CHECK(r.test(0, 0));  // center (1/16, 1/16) lies on the corner
    CHECK(r.popcount() == 64);
}

TEST_CASE("rasterize: combinators match pointwise logic") {
    GridGeometry g = unit_grid(32);
    RegionSpec d = RegionSpec::disk({0.5, 0.5}, 0.4);
    RegionSpec q = RegionSpec::rect({0.1, 0.1}, {0.6, 0.9});
    RegionSpec tri = RegionSpec::polygon({{0.1, 0.1}, {0.9, 0.2}, {0.5, 0.95}});
    GridSet rd = rasterize(d, g), rq = rasterize(q, g), rt = rasterize(tri, g);
    CHECK(rasterize(RegionSpec::union_of({d, q, tri}), g) == ((rd | rq) | rt));
    CHECK(rasterize(RegionSpec::intersection_of({d, q}), g) == (rd & rq));
    CHECK(rasterize(RegionSpec::complement_within(q, d), g) == (rd - rq));
    CHECK(!rt.empty());
}

TEST_CASE("rasterize: degenerate empty raster is allowed") {
    GridSet r = rasterize(RegionSpec::disk({-5, -5}, 0.1), unit_grid(8));
    CHECK(r.empty());
}

TEST_CASE("region validation") {
    CHECK_THROWS_AS(RegionSpec::rect({1, 0}, {0, 1}), pwt::ValidationError);
    CHECK_THROWS_AS(RegionSpec::disk({0, 0}, 0.0), pwt::ValidationError);
    // Clockwise triangle.
    CHECK_THROWS_AS(RegionSpec::polygon({{0, 0}, {0, 1}, {1, 0}}), pwt::ValidationError);
    // Non-convex CCW quad.
    CHECK_THROWS_AS(RegionSpec::polygon({{0, 0}, {1, 0}, {0.1, 0.1}, {0, 1}}),
                    pwt::ValidationError);
    // Self-intersecting bowtie.
    CHECK_THROWS_AS(RegionSpec::polygon({{0, 0}, {1, 1}, {1, 0}, {0, 1}}), pwt::ValidationError);
}

TEST_CASE("snap_vector: examples including the tie rule") {
    GridGeometry g = unit_grid(4);  // h = 1/4
    auto s0 = snap_vector({0, 0}, g);
    CHECK(s0.di == 0);
    CHECK(s0.dj == 0);
    CHECK(s0.residual.x == 0.0);
    auto s1 = snap_vector({0.26, -0.24}, g);
    CHECK(s1.di == 1);
    CHECK(s1.dj == -1);
    CHECK(s1.residual.x == doctest::Approx(0.01));
    CHECK(s1.residual.y == doctest::Approx(0.01));
    auto s2 = snap_vector({0.125, 0}, g);  // exactly h/2: ties toward +inf
    CHECK(s2.di == 1);
    CHECK(s2.residual.x == doctest::Approx(-0.125));
    auto s3 = snap_vector({-0.125, 0}, g);  // -h/2 also rounds up, to 0
    CHECK(s3.di == 0);
}

TEST_CASE("apply: identity branch returns K") {
    GridGeometry g = unit_grid(8);
    PwtSpec spec(RegionSpec::rect({0, 0}, {1, 1}), {{RegionSpec::rect({0, 0}, {1, 1}), {0, 0}}},
                 g);
    GridSet k = rasterize(RegionSpec::disk({0.4, 0.6}, 0.3), g);
    CHECK(apply_grid(spec, k) == k);
}

TEST_CASE("apply: torus cyclic shift has order nx") {
    GridGeometry g = unit_grid(4, Wrap::torus);
    PwtSpec spec(RegionSpec::rect({0, 0}, {1, 1}),
                 {{RegionSpec::rect({0, 0}, {1, 1}), {g.h, 0}}}, g);
    GridSet k(g);
    k.set(1, 2);
    k.set(3, 0);
    GridSet cur = k;
    for (int n = 0; n < 4; ++n) {
        CHECK(cur.popcount() == k.popcount());
        cur = apply_grid(spec, cur);
    }
    CHECK(cur == k);
}

TEST_CASE("apply: two-branch split matches the per-cell oracle") {
    GridGeometry g = unit_grid(16);
    RegionSpec omega = RegionSpec::rect({0, 0}, {1, 1});
    RegionSpec left = RegionSpec::rect({0, 0}, {0.5, 1});
    RegionSpec right = RegionSpec::rect({0.5, 0}, {1, 1});
    PwtSpec spec(omega, {{left, {g.h, 0}}, {right, {-g.h, 0}}}, g);
    GridSet k = spec.domain();
    GridSet img = apply_grid(spec, k);
    // Oracle: enumerate each set cell, apply every containing branch, union.
    GridSet expect(g);
    for (int j = 0; j < g.ny; ++j) {
        for (int i = 0; i < g.nx; ++i) {
            if (!k.test(i, j)) continue;
            for (const auto& b : spec.branches()) {
                if (b.mask.test(i, j)) expect.set(i + b.snap.di, j + b.snap.dj);
            }
        }
    }
    CHECK(img == expect);
    // The overlap column makes the image smaller than the domain.
    CHECK(img.popcount() < k.popcount());
}

TEST_CASE("spec validation: cover and self-mapping") {
    GridGeometry g = unit_grid(8);
    RegionSpec omega = RegionSpec::rect({0, 0}, {1, 1});
    // Branches fail to cover omega.
    CHECK_THROWS_AS(PwtSpec(omega, {{RegionSpec::rect({0, 0}, {0.5, 1}), {0, 0}}}, g),
                    pwt::ValidationError);
    // Branch image escapes omega.
    CHECK_THROWS_AS(PwtSpec(omega, {{omega, {0.5, 0}}}, g), pwt::ValidationError);
    // Torus wrap lifts the self-mapping restriction.
    GridGeometry gt = unit_grid(8, Wrap::torus);
    CHECK_NOTHROW(PwtSpec(omega, {{omega, {0.5, 0}}}, gt));
}

TEST_CASE("apply: geometry mismatch and domain errors") {
    GridGeometry g = unit_grid(8);
    PwtSpec spec(RegionSpec::rect({0, 0}, {1, 1}), {{RegionSpec::rect({0, 0}, {1, 1}), {0, 0}}},
                 g);
    GridSet other(unit_grid(16));
    CHECK_THROWS_AS(apply_grid(spec, other), pwt::ValidationError);
    GridSet outside(g, true);  // equals the domain raster here, so shrink geometry below
    GridGeometry g2 = unit_grid(8);
    PwtSpec small(RegionSpec::rect({0, 0}, {0.5, 1}),
                  {{RegionSpec::rect({0, 0}, {0.5, 1}), {0, 0}}}, g2);
    CHECK_THROWS_AS(apply_grid(small, outside), pwt::DomainError);
}

TEST_CASE("attractor: identity stabilizes immediately") {
    GridGeometry g = unit_grid(8);
    PwtSpec spec(RegionSpec::disk({0.5, 0.5}, 0.4), {{RegionSpec::rect({0, 0}, {1, 1}), {0, 0}}},
                 g);
    auto res = attractor_grid(spec, 10);
    REQUIRE(res.stabilized());
    CHECK(res.steps == 0);
    CHECK(res.set == spec.domain());
}

TEST_CASE("attractor: grid bijection conserves everything") {
    GridGeometry g = unit_grid(4, Wrap::torus);
    PwtSpec spec(RegionSpec::rect({0, 0}, {1, 1}),
                 {{RegionSpec::rect({0, 0}, {1, 1}), {g.h, 0}}}, g);
    auto res = attractor_grid(spec, 10);
    REQUIRE(res.stabilized());
    CHECK(res.steps == 0);
    CHECK(res.set.popcount() == 16);
}

TEST_CASE("attractor: planar grid-IET keeps the whole domain") {
    // Half swap: snapped branch images tile the domain raster, so popcount is
    // conserved and the attractor is the full raster at step 0.
    GridGeometry g = unit_grid(16);
    PwtSpec spec(RegionSpec::rect({0, 0}, {1, 1}),
                 {{RegionSpec::rect({0, 0}, {0.5, 1}), {0.5, 0}},
                  {RegionSpec::rect({0.5, 0}, {1, 1}), {-0.5, 0}}},
                 g);
    GridSet k = rasterize(RegionSpec::disk({0.3, 0.5}, 0.2), g);
    CHECK(apply_grid(spec, k).popcount() == k.popcount());
    auto res = attractor_grid(spec, 10);
    REQUIRE(res.stabilized());
    CHECK(res.steps == 0);
    CHECK(res.set == spec.domain());
}

TEST_CASE("attractor: three-branch disk spec loses area and stabilizes") {
    // Disk split into three sectors, each translated inward along its
    // bisector; a sector of width w may move by up to 2R cos(w/2) and stay
    // inside the disk, which is how the branches here were chosen.
    GridGeometry g = unit_grid(128);
    Vec2 c{0.5, 0.5};
    const double R = 0.45;
    RegionSpec disk = RegionSpec::disk(c, R);
    const double ang[4] = {1.0536165882346371, 3.3154299875983524, 4.8876199038178969,
                           1.0536165882346371 + 2 * M_PI};
    const Vec2 vs[3] = {{0.093359347412611843, -0.12117268431592472},
                        {0.062391533293224451, 0.08920039176399748},
                        {-0.10466845187846452, 0.028443324451676515}};
    std::vector<std::pair<RegionSpec, Vec2>> branches;
    for (int k = 0; k < 3; ++k) {
        RegionSpec wedge = RegionSpec::polygon(
            {c,
             {c.x + 3 * R * std::cos(ang[k]), c.y + 3 * R * std::sin(ang[k])},
             {c.x + 3 * R * std::cos(ang[k + 1]), c.y + 3 * R * std::sin(ang[k + 1])}});
        branches.push_back({RegionSpec::intersection_of({disk, wedge}), vs[k]});
    }
    PwtSpec spec(disk, branches, g);
    auto res = attractor_grid(spec, 5000);
    REQUIRE(res.stabilized());
    CHECK(res.set.popcount() > 0);
    CHECK(res.set.popcount() < spec.domain().popcount());
    // Invariance at stabilization, bit-exactly.
    CHECK(apply_grid(spec, res.set) == res.set);
    // Monotone containment along the trace.
    for (std::size_t i = 1; i < res.area_trace.size(); ++i)
        CHECK(res.area_trace[i] <= res.area_trace[i - 1]);
}

TEST_CASE("attractor: cap semantics") {
    GridGeometry g = unit_grid(16, Wrap::torus);
    // Keeps shifting a strip into itself: stabilizes, but not at step 0.
    PwtSpec spec(RegionSpec::rect({0, 0}, {1, 1}),
                 {{RegionSpec::rect({0, 0}, {0.75, 1}), {g.h, 0}},
                  {RegionSpec::rect({0.75, 0}, {1, 1}), {-0.25, 0}}},
                 g);
    auto full = attractor_grid(spec, 200);
    REQUIRE(full.stabilized());
    REQUIRE(full.steps > 0);
    auto capped = attractor_grid(spec, full.steps);  // one application short
    CHECK(!capped.stabilized());
    CHECK(capped.steps == full.steps);
    CHECK_THROWS_AS(attractor_grid(spec, 0), pwt::ValidationError);
}
