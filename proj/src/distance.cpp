#include "pwt/distance.hpp"

#include <cmath>
#include <limits>

#include "pwt/errors.hpp"

namespace pwt {

namespace {

constexpr std::int64_t kInf = std::numeric_limits<std::int64_t>::max() / 4;

// 1-D squared distance transform over one contiguous row of f: the parabola
// envelope is maintained with rational boundaries (num/den) compared by
// cross-multiplication, so parabola selection is exact integer arithmetic.
// Entries equal to kInf mark absent sources. The sentinel (-1, 0) encodes a
// -infinity left boundary for the first parabola.
void edt_1d(const std::int64_t* f, std::int64_t* out, int n, std::vector<int>& v,
            std::vector<std::int64_t>& zn, std::vector<std::int64_t>& zd) {
    v.clear();
    zn.clear();
    zd.clear();
    for (int q = 0; q < n; ++q) {
        const std::int64_t fq = f[q];
        if (fq >= kInf) continue;
        std::int64_t num = 0, den = 1;
        while (!v.empty()) {
            const int p = v.back();
            // Intersection of the parabolas rooted at q and p:
            // s = (fq + q^2 - fp - p^2) / (2q - 2p), den > 0.
            num = fq + static_cast<std::int64_t>(q) * q - f[p] -
                  static_cast<std::int64_t>(p) * p;
            den = 2 * (q - p);
            if (num * zd.back() <= zn.back() * den) {
                v.pop_back();
                zn.pop_back();
                zd.pop_back();
            } else {
                break;
            }
        }
        if (v.empty()) {
            v.push_back(q);
            zn.push_back(-1);
            zd.push_back(0);
        } else {
            v.push_back(q);
            zn.push_back(num);
            zd.push_back(den);
        }
    }
    if (v.empty()) {
        for (int i = 0; i < n; ++i) out[i] = kInf;
        return;
    }
    std::size_t k = 0;
    for (int i = 0; i < n; ++i) {
        while (k + 1 < v.size() && zn[k + 1] <= static_cast<std::int64_t>(i) * zd[k + 1]) ++k;
        const std::int64_t d = i - v[k];
        out[i] = d * d + f[v[k]];
    }
}

}  // namespace

double DistanceField::at(int i, int j) const {
    return geom_.h * std::sqrt(static_cast<double>(squared_cells(i, j)));
}

DistanceField distance_transform(const GridSet& x) {
    if (x.empty()) throw DomainError("distance_transform: source set is empty");
    const GridGeometry& g = x.geometry();
    const bool torus = g.wrap == Wrap::torus;
    const int tiles = torus ? 3 : 1;
    const int nx = g.nx * tiles, ny = g.ny * tiles;

    std::vector<std::int64_t> f(static_cast<std::size_t>(nx) * ny);
    // Vertical pass: per column, distance to the nearest set cell in that
    // column (two sweeps), then square.
    for (int i = 0; i < nx; ++i) {
        std::int64_t run = kInf;
        for (int j = 0; j < ny; ++j) {
            if (x.test(i % g.nx, j % g.ny))
                run = 0;
            else if (run < kInf)
                ++run;
            f[static_cast<std::size_t>(j) * nx + i] = run;
        }
        run = kInf;
        for (int j = ny - 1; j >= 0; --j) {
            if (x.test(i % g.nx, j % g.ny))
                run = 0;
            else if (run < kInf)
                ++run;
            auto& cell = f[static_cast<std::size_t>(j) * nx + i];
            cell = std::min(cell, run);
        }
    }
    for (auto& val : f) {
        if (val < kInf) val = val * val;
    }

    // Horizontal pass: parabola envelope per (contiguous) row.
    std::vector<std::int64_t> out(f.size());
    std::vector<int> v;
    std::vector<std::int64_t> zn, zd;
    for (int j = 0; j < ny; ++j) {
        edt_1d(&f[static_cast<std::size_t>(j) * nx], &out[static_cast<std::size_t>(j) * nx], nx, v,
               zn, zd);
    }

    if (!torus) return {g, std::move(out)};
    // The mask was tiled 3x3; the center tile sees sources in all nine
    // neighbor tiles, which is exactly the wrapped metric (per-axis wrap
    // never needs a shift beyond one period).
    std::vector<std::int64_t> center(static_cast<std::size_t>(g.nx) * g.ny);
    for (int j = 0; j < g.ny; ++j) {
        for (int i = 0; i < g.nx; ++i) {
            center[static_cast<std::size_t>(j) * g.nx + i] =
                out[static_cast<std::size_t>(j + g.ny) * nx + (i + g.nx)];
        }
    }
    return {g, std::move(center)};
}

double directed_hausdorff(const GridSet& x, const GridSet& y) {
    x.require_same_geometry(y);
    if (x.empty() || y.empty()) throw DomainError("directed_hausdorff: empty input");
    DistanceField d = distance_transform(y);
    std::int64_t worst = 0;
    const GridGeometry& g = x.geometry();
    for (int j = 0; j < g.ny; ++j) {
        for (int i = 0; i < g.nx; ++i) {
            if (x.test(i, j)) worst = std::max(worst, d.squared_cells(i, j));
        }
    }
    return g.h * std::sqrt(static_cast<double>(worst));
}

double hausdorff(const GridSet& x, const GridSet& y) {
    return std::max(directed_hausdorff(x, y), directed_hausdorff(y, x));
}

GridSet epsilon_neighborhood(const GridSet& x, double eps) {
    if (x.empty()) throw DomainError("epsilon_neighborhood: empty input");
    if (!(eps >= 0.0)) throw ValidationError("epsilon_neighborhood: eps must be >= 0");
    DistanceField d = distance_transform(x);
    const GridGeometry& g = x.geometry();
    GridSet out(g);
    for (int j = 0; j < g.ny; ++j) {
        for (int i = 0; i < g.nx; ++i) {
            if (d.at(i, j) <= eps) out.set(i, j);
        }
    }
    return out;
}

}  // namespace pwt
