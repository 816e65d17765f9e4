#include "pwt/torus.hpp"

#include <cmath>
#include <optional>

#include "pwt/distance.hpp"
#include "pwt/errors.hpp"

namespace pwt {

namespace {

double frac(double v) {
    double f = v - std::floor(v);
    return f >= 1.0 ? 0.0 : f;  // guard against rounding at the seam
}

int cell_of(double u, int n) {
    int i = static_cast<int>(std::floor(u * n));
    if (i < 0) i = 0;
    if (i >= n) i = n - 1;
    return i;
}

void require_unit_torus(const GridGeometry& g, const char* who) {
    if (g.wrap != Wrap::torus) throw ValidationError(std::string(who) + ": wrap must be torus");
    if (std::abs(g.nx * g.h - 1.0) > 1e-9 || std::abs(g.ny * g.h - 1.0) > 1e-9)
        throw ValidationError(std::string(who) + ": torus periods must equal 1");
}

}  // namespace

PwtSpec TorusSpec::build(const RegionSpec& region, Vec2 v0, Vec2 v1, const GridGeometry& geom) {
    require_unit_torus(geom, "TorusSpec");
    GridSet full(geom, true);
    GridSet r = rasterize(region, geom);
    return PwtSpec(std::move(full), {{r, v0}, {r.complement(), v1}});
}

TorusSpec::TorusSpec(const RegionSpec& region, Vec2 v0, Vec2 v1, const GridGeometry& geom)
    : map_(build(region, v0, v1, geom)) {}

GridSet double_rotation_apply(const TorusSpec& spec, const GridSet& k) {
    return apply_grid(spec.map(), k);
}

GridSet lost_region(const TorusSpec& spec, const GridSet& k) {
    return k - apply_grid(spec.map(), k);
}

LatticeBasis::LatticeBasis(Vec2 v0, Vec2 col1, Vec2 col2)
    : v0_(v0), a_(col1.x), b_(col2.x), c_(col1.y), d_(col2.y) {
    double det = a_ * d_ - b_ * c_;
    if (std::abs(det) < 1e-12) throw ValidationError("LatticeBasis: singular basis");
    inv_[0] = d_ / det;
    inv_[1] = -b_ / det;
    inv_[2] = -c_ / det;
    inv_[3] = a_ / det;
}

Vec2 LatticeBasis::solve(Vec2 x) const {
    return {inv_[0] * x.x + inv_[1] * x.y, inv_[2] * x.x + inv_[3] * x.y};
}

Vec2 LatticeBasis::to_fundamental(Vec2 x) const {
    Vec2 u = solve(x);
    return {frac(u.x), frac(u.y)};
}

LatticeBasis lattice_from_snapped(const PwtSpec& spec) {
    if (spec.branches().size() != 3)
        throw ValidationError("lattice_from_snapped: need m = d+1 = 3 branches");
    const double h = spec.geometry().h;
    Vec2 snapped[3];
    for (int i = 0; i < 3; ++i) {
        snapped[i] = {spec.branches()[i].snap.di * h, spec.branches()[i].snap.dj * h};
    }
    return LatticeBasis(snapped[0],
                        {snapped[1].x - snapped[0].x, snapped[1].y - snapped[0].y},
                        {snapped[2].x - snapped[0].x, snapped[2].y - snapped[0].y});
}

namespace {

std::optional<long long> near_int(double v) {
    double r = std::round(v);
    if (std::abs(v - r) <= 1e-9) return static_cast<long long>(r);
    return std::nullopt;
}

}  // namespace

GridSet project_to_torus(const GridSet& k, const LatticeBasis& basis,
                         const GridGeometry& torus_geom) {
    require_unit_torus(torus_geom, "project_to_torus");
    GridSet out(torus_geom);
    const GridGeometry& g = k.geometry();

    // When both basis columns are whole numbers of planar cells (snapped
    // lattices always are), reduce the cell offset modulo the integer lattice
    // exactly: lattice-translated cells then project to identical torus cells
    // bit for bit, with no dependence on floating-point routing.
    auto p1 = near_int(basis.column1().x / g.h), q1 = near_int(basis.column1().y / g.h);
    auto p2 = near_int(basis.column2().x / g.h), q2 = near_int(basis.column2().y / g.h);
    if (p1 && q1 && p2 && q2) {
        long long det = *p1 * *q2 - *p2 * *q1;
        if (det != 0) {
            long long a11 = *q2, a12 = -*p2, a21 = -*q1, a22 = *p1;
            if (det < 0) {
                det = -det;
                a11 = -a11;
                a12 = -a12;
                a21 = -a21;
                a22 = -a22;
            }
            const long long den = 2 * det;  // offsets live on the half-cell grid
            const Vec2 base = basis.solve({g.ox, g.oy});
            for (int j = 0; j < g.ny; ++j) {
                for (int i = 0; i < g.nx; ++i) {
                    if (!k.test(i, j)) continue;
                    const long long ci = 2ll * i + 1, cj = 2ll * j + 1;
                    long long t1 = ((a11 * ci + a12 * cj) % den + den) % den;
                    long long t2 = ((a21 * ci + a22 * cj) % den + den) % den;
                    double ux = frac(base.x + static_cast<double>(t1) / static_cast<double>(den));
                    double uy = frac(base.y + static_cast<double>(t2) / static_cast<double>(den));
                    out.set(cell_of(ux, torus_geom.nx), cell_of(uy, torus_geom.ny));
                }
            }
            return out;
        }
    }

    for (int j = 0; j < g.ny; ++j) {
        for (int i = 0; i < g.nx; ++i) {
            if (!k.test(i, j)) continue;
            Vec2 u = basis.to_fundamental({g.cx(i), g.cy(j)});
            out.set(cell_of(u.x, torus_geom.nx), cell_of(u.y, torus_geom.ny));
        }
    }
    return out;
}

GridSet torus_rotate(const GridSet& k, Vec2 w) {
    require_unit_torus(k.geometry(), "torus_rotate");
    const GridGeometry& g = k.geometry();
    GridSet out(g);
    for (int j = 0; j < g.ny; ++j) {
        for (int i = 0; i < g.nx; ++i) {
            if (!k.test(i, j)) continue;
            double ux = frac(g.cx(i) + w.x);
            double uy = frac(g.cy(j) + w.y);
            out.set(cell_of(ux, g.nx), cell_of(uy, g.ny));
        }
    }
    return out;
}

double check_projection_lemma(const PwtSpec& spec, const GridSet& k, const LatticeBasis& basis,
                              const GridGeometry& torus_geom) {
    if (spec.branches().size() != 3)
        throw ValidationError("check_projection_lemma: need m = d+1 = 3 branches");
    GridSet mapped_then_projected = project_to_torus(apply_grid(spec, k), basis, torus_geom);
    Vec2 w = basis.solve(basis.base_vector());
    GridSet projected_then_rotated = torus_rotate(project_to_torus(k, basis, torus_geom), w);
    return hausdorff(mapped_then_projected, projected_then_rotated);
}

DependenceResult rational_dependence_check(const std::vector<std::vector<Rational>>& vectors) {
    const std::size_t m = vectors.size();
    if (m == 0) return {true, {}};
    const std::size_t d = vectors[0].size();
    for (const auto& v : vectors) {
        if (v.size() != d)
            throw ValidationError("rational_dependence_check: inconsistent dimensions");
    }
    // Row-reduce the d x m matrix whose columns are the vectors; a free
    // column yields a nullspace certificate.
    std::vector<std::vector<Rational>> mat(d, std::vector<Rational>(m));
    for (std::size_t col = 0; col < m; ++col)
        for (std::size_t row = 0; row < d; ++row) mat[row][col] = vectors[col][row];

    std::vector<std::size_t> pivot_col;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m && row < d; ++col) {
        std::size_t sel = row;
        while (sel < d && mat[sel][col].is_zero()) ++sel;
        if (sel == d) continue;
        std::swap(mat[sel], mat[row]);
        Rational inv = Rational(1) / mat[row][col];
        for (std::size_t c2 = col; c2 < m; ++c2) mat[row][c2] = mat[row][c2] * inv;
        for (std::size_t r2 = 0; r2 < d; ++r2) {
            if (r2 == row || mat[r2][col].is_zero()) continue;
            Rational factor = mat[r2][col];
            for (std::size_t c2 = col; c2 < m; ++c2)
                mat[r2][c2] = mat[r2][c2] - factor * mat[row][c2];
        }
        pivot_col.push_back(col);
        ++row;
    }
    if (pivot_col.size() == m) return {true, {}};

    // First non-pivot column: certificate has 1 there, minus the reduced
    // coefficients at the pivot columns.
    std::size_t free_col = 0;
    {
        std::size_t p = 0;
        while (free_col < m && p < pivot_col.size() && pivot_col[p] == free_col) {
            ++p;
            ++free_col;
        }
    }
    std::vector<Rational> cert(m, Rational(0));
    cert[free_col] = Rational(1);
    for (std::size_t p = 0; p < pivot_col.size(); ++p) cert[pivot_col[p]] = -mat[p][free_col];
    return {false, std::move(cert)};
}

}  // namespace pwt
