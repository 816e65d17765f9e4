#pragma once

// Shared generators and bridges used by the module tests and the acceptance
// suite. Everything is seeded and deterministic.

#include <cmath>
#include <utility>
#include <vector>

#include "pwt/itm.hpp"
#include "pwt/map2d.hpp"
#include "pwt/rng.hpp"

namespace pwt::testsupport {

inline GridGeometry unit_grid(int n, Wrap wrap = Wrap::none) {
    return {0.0, 0.0, 1.0 / n, n, n, wrap};
}

inline GridSet random_mask(Rng& rng, const GridGeometry& g, double density) {
    GridSet out(g);
    for (int j = 0; j < g.ny; ++j)
        for (int i = 0; i < g.nx; ++i)
            if (rng.uniform01() < density) out.set(i, j);
    if (out.empty()) out.set(static_cast<int>(rng.below(g.nx)), static_cast<int>(rng.below(g.ny)));
    return out;
}

/// Disk split into three sectors, each translated inward along its bisector
/// (with a little tangential jitter). A sector of width w may translate by up
/// to 2R cos(w/2) and stay inside the disk; staying under that bound plus
/// rejection against raster validation makes every returned spec valid.
struct DiskSpecPieces {
    RegionSpec omega;
    std::vector<std::pair<RegionSpec, Vec2>> branches;
};

inline DiskSpecPieces random_disk_pieces(Rng& rng, double R = 0.45) {
    const Vec2 c{0.5, 0.5};
    const double two_pi = 2.0 * M_PI;
    for (;;) {
        double th0 = rng.uniform01() * two_pi;
        double w1 = 0.7 + rng.uniform01() * 1.8;
        double w2 = 0.7 + rng.uniform01() * 1.8;
        double rest = two_pi - w1 - w2;
        if (rest < 0.7 || rest > 2.8) continue;
        double ang[4] = {th0, th0 + w1, th0 + w1 + w2, th0 + two_pi};
        DiskSpecPieces out{RegionSpec::disk(c, R), {}};
        for (int k = 0; k < 3; ++k) {
            double width = ang[k + 1] - ang[k];
            double bis = 0.5 * (ang[k] + ang[k + 1]);
            double bound = std::min(R, 2 * R * std::cos(width / 2));
            double s = (0.2 + 0.55 * rng.uniform01()) * bound;
            double jit = (rng.uniform01() - 0.5) * 0.05 * R;
            Vec2 v{-s * std::cos(bis) - jit * std::sin(bis),
                   -s * std::sin(bis) + jit * std::cos(bis)};
            RegionSpec wedge = RegionSpec::polygon(
                {c,
                 {c.x + 3 * R * std::cos(ang[k]), c.y + 3 * R * std::sin(ang[k])},
                 {c.x + 3 * R * std::cos(ang[k + 1]), c.y + 3 * R * std::sin(ang[k + 1])}});
            out.branches.push_back({RegionSpec::intersection_of({out.omega, wedge}), v});
        }
        return out;
    }
}

inline PwtSpec random_disk_spec(Rng& rng, const GridGeometry& g, double R = 0.45) {
    for (;;) {
        DiskSpecPieces pieces = random_disk_pieces(rng, R);
        try {
            return PwtSpec(pieces.omega, pieces.branches, g);
        } catch (const ValidationError&) {
            // jitter pushed a raster cell out; draw again
        }
    }
}

/// Random 2-branch line-mode ITM on [0,1]: breakpoint c, v0 in [0, 1-c],
/// v1 in [-c, 0], all with the given denominator bound.
inline ItmSpec random_two_branch_itm(Rng& rng, long long max_den) {
    auto pick = [&](const Rational& lo, const Rational& hi, long long den) {
        long long lo_k = ((lo * Rational(den)).floor()).to_ll();
        while (Rational(lo_k, den) < lo) ++lo_k;
        long long hi_k = ((hi * Rational(den)).floor()).to_ll();
        if (lo_k > hi_k) return lo;
        return Rational(
            lo_k + static_cast<long long>(rng.below(static_cast<std::uint64_t>(hi_k - lo_k + 1))),
            den);
    };
    long long dc = 2 + static_cast<long long>(rng.below(max_den - 1));
    Rational c = pick(Rational(1, max_den), Rational(max_den - 1, max_den), dc);
    Rational v0 = pick(Rational(0), Rational(1) - c, 1 + static_cast<long long>(rng.below(max_den)));
    Rational v1 = pick(-c, Rational(0), 1 + static_cast<long long>(rng.below(max_den)));
    return ItmSpec({Rational(0), Rational(1)},
                   {{{Rational(0), c}, v0}, {{c, Rational(1)}, v1}}, ItmMode::line);
}

/// Random IET: random breakpoints, segments reassembled in a random order.
inline ItmSpec random_exchange_itm(Rng& rng, int max_branches, long long den) {
    int m = 2 + static_cast<int>(rng.below(max_branches - 1));
    std::vector<long long> cuts = {0, den};
    while (static_cast<int>(cuts.size()) < m + 1) {
        long long c = 1 + static_cast<long long>(rng.below(den - 1));
        bool dup = false;
        for (long long x : cuts) dup |= x == c;
        if (!dup) cuts.push_back(c);
    }
    std::sort(cuts.begin(), cuts.end());
    std::vector<int> order(m);
    for (int i = 0; i < m; ++i) order[i] = i;
    for (int i = m - 1; i > 0; --i)
        std::swap(order[i], order[rng.below(static_cast<std::uint64_t>(i + 1))]);
    std::vector<Rational> dest(m);
    Rational at(0);
    for (int k = 0; k < m; ++k) {
        dest[order[k]] = at;
        at = at + Rational(cuts[order[k] + 1] - cuts[order[k]], den);
    }
    std::vector<ItmBranch> branches;
    for (int i = 0; i < m; ++i) {
        Rational lo(cuts[i], den), hi(cuts[i + 1], den);
        branches.push_back({{lo, hi}, dest[i] - lo});
    }
    return ItmSpec({Rational(0), Rational(1)}, std::move(branches), ItmMode::line);
}

/// The same 2-branch map as a one-row grid spec (vectors must be multiples of
/// the cell size for the two engines to coincide).
inline PwtSpec itm_as_grid_spec(const ItmSpec& itm, int n) {
    const double h = 1.0 / n;
    auto rect1d = [&](const Interval1& r) {
        return RegionSpec::rect({r.lo.to_double(), 0.0}, {r.hi.to_double(), h});
    };
    std::vector<std::pair<RegionSpec, Vec2>> branches;
    for (const auto& b : itm.branches())
        branches.push_back({rect1d(b.region), {b.shift.to_double(), 0.0}});
    GridGeometry g{0.0, 0.0, h, n, 1, Wrap::none};
    return {rect1d(itm.omega()), branches, g};
}

/// Cells of the one-row grid whose centers lie in the union (exact rational
/// membership; centers are (2i+1)/(2n)).
inline GridSet rasterize_exact(const IntervalUnion& u, int n) {
    GridGeometry g{0.0, 0.0, 1.0 / n, n, 1, Wrap::none};
    GridSet out(g);
    for (int i = 0; i < n; ++i) {
        if (u.contains(Rational(2 * i + 1, 2ll * n))) out.set(i, 0);
    }
    return out;
}

}  // namespace pwt::testsupport
