#include "pwt/experiments.hpp"

#include <chrono>
#include <cmath>
#include <limits>
#include <set>

#include "pwt/distance.hpp"
#include "pwt/errors.hpp"
#include "pwt/fmt.hpp"
#include "pwt/rng.hpp"

namespace pwt {

namespace {

double elapsed_ms(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
        .count();
}

// Max distance-to-A over the cells of K, in physical units.
double directed_against(const DistanceField& to_ref, const GridSet& k) {
    std::int64_t worst = 0;
    const GridGeometry& g = k.geometry();
    for (int j = 0; j < g.ny; ++j) {
        for (int i = 0; i < g.nx; ++i) {
            if (k.test(i, j)) worst = std::max(worst, to_ref.squared_cells(i, j));
        }
    }
    return g.h * std::sqrt(static_cast<double>(worst));
}

Vec2 sample_in_ball(Rng& rng, double radius) {
    for (;;) {
        double x = rng.uniform(-1.0, 1.0), y = rng.uniform(-1.0, 1.0);
        if (x * x + y * y <= 1.0) return {x * radius, y * radius};
    }
}

}  // namespace

ConvergenceCurve convergence_curve(const PwtSpec& spec, int cap) {
    GridAttractor res = attractor_grid(spec, cap);
    DistanceField to_ref = distance_transform(res.set);
    ConvergenceCurve curve{res.stabilized(), res.steps, {}};
    GridSet k = spec.domain();
    curve.distance.push_back(directed_against(to_ref, k));
    for (int n = 0; n < res.steps; ++n) {
        k = apply_grid(spec, k);
        curve.distance.push_back(directed_against(to_ref, k));
    }
    return curve;
}

std::string curve_csv(const ConvergenceCurve& curve) {
    std::string out = "n,directed_hausdorff\n";
    for (std::size_t n = 0; n < curve.distance.size(); ++n) {
        out += std::to_string(n) + "," + fmt_double(curve.distance[n]) + "\n";
    }
    out += std::string("# status=") + (curve.stabilized ? "stabilized" : "cap_reached") +
           " steps=" + std::to_string(curve.steps) + "\n";
    return out;
}

SweepResult finite_type_sweep(const RegionSpec& region, const GridGeometry& geom,
                              const SweepConfig& config) {
    std::vector<std::pair<Vec2, Vec2>> params;
    if (config.ranges) {
        const auto& r = *config.ranges;
        for (const auto& range : r) {
            if (range.steps < 1) throw ValidationError("finite_type_sweep: steps must be >= 1");
            if (!(range.lo <= range.hi))
                throw ValidationError("finite_type_sweep: empty parameter range");
        }
        auto at = [](const SweepConfig::Range& range, int k) {
            return range.steps == 1
                       ? range.lo
                       : range.lo + (range.hi - range.lo) * k / (range.steps - 1);
        };
        for (int a = 0; a < r[0].steps; ++a) {
            for (int b = 0; b < r[1].steps; ++b) {
                Vec2 v0{at(r[0], a), at(r[1], b)};
                if (config.tie_vectors) {
                    params.emplace_back(v0, v0);
                    continue;
                }
                for (int c = 0; c < r[2].steps; ++c)
                    for (int d = 0; d < r[3].steps; ++d)
                        params.emplace_back(v0, Vec2{at(r[2], c), at(r[3], d)});
            }
        }
    } else {
        if (config.count < 1) throw ValidationError("finite_type_sweep: sample count must be >= 1");
        Rng rng(config.seed);
        for (int s = 0; s < config.count; ++s) {
            Vec2 v0{rng.uniform01(), rng.uniform01()};
            Vec2 v1 = config.tie_vectors ? v0 : Vec2{rng.uniform01(), rng.uniform01()};
            params.emplace_back(v0, v1);
        }
    }

    SweepResult out{{}, 0.0, {}};
    int stabilized = 0;
    for (std::size_t s = 0; s < params.size(); ++s) {
        auto t0 = std::chrono::steady_clock::now();
        TorusSpec spec(region, params[s].first, params[s].second, geom);
        GridAttractor res = attractor_grid(spec.map(), config.cap);
        double ms = elapsed_ms(t0);
        out.wall_ms.push_back(ms);
        if (res.stabilized()) ++stabilized;
        out.rows.push_back({static_cast<int>(s), params[s].first, params[s].second,
                            res.stabilized(), res.steps, res.set.popcount(),
                            config.record_timing ? ms : 0.0});
    }
    out.stabilized_fraction =
        params.empty() ? 0.0 : static_cast<double>(stabilized) / static_cast<double>(params.size());
    return out;
}

std::string sweep_csv(const SweepResult& result, bool record_timing) {
    std::string out = "sample_id,v0x,v0y,v1x,v1y,status,steps,attractor_cells,wall_ms\n";
    for (const auto& row : result.rows) {
        out += std::to_string(row.sample_id) + "," + fmt_double(row.v0.x) + "," +
               fmt_double(row.v0.y) + "," + fmt_double(row.v1.x) + "," + fmt_double(row.v1.y) +
               "," + (row.stabilized ? "stabilized" : "cap_reached") + "," +
               std::to_string(row.steps) + "," + std::to_string(row.attractor_cells) + "," +
               (record_timing ? fmt_double(row.wall_ms) : "0") + "\n";
    }
    out += "# stabilized_fraction=" + fmt_double(result.stabilized_fraction) + "\n";
    return out;
}

SemiProbeResult semicontinuity_probe(const PwtSpec& base, double radius, int samples, double eps,
                                     std::uint64_t seed, int cap) {
    if (samples < 1) throw ValidationError("semicontinuity_probe: samples must be >= 1");
    if (!(radius >= 0.0)) throw ValidationError("semicontinuity_probe: radius must be >= 0");
    GridAttractor ref = attractor_grid(base, cap);
    if (!ref.stabilized())
        throw DomainError("semicontinuity_probe: base spec reached cap after " +
                          std::to_string(ref.steps) + " steps without stabilizing");
    DistanceField to_ref = distance_transform(ref.set);
    GridSet eps_hull = epsilon_neighborhood(ref.set, eps);

    std::vector<std::pair<GridSet, Vec2>> base_branches;
    for (const auto& b : base.branches()) base_branches.emplace_back(b.mask, b.requested);

    Rng rng(seed);
    std::set<std::vector<std::pair<int, int>>> seen;
    SemiProbeResult out{{}, ref.steps, 0.0, 0, 0, 0};
    for (int s = 0; s < samples; ++s) {
        auto branches = base_branches;
        std::vector<Vec2> vectors;
        std::vector<std::pair<int, int>> offsets;
        for (auto& [mask, v] : branches) {
            Vec2 d = sample_in_ball(rng, radius);
            v = {v.x + d.x, v.y + d.y};
            vectors.push_back(v);
            SnapResult snap = snap_vector(v, base.geometry());
            offsets.emplace_back(snap.di, snap.dj);
        }
        if (!seen.insert(offsets).second) {
            ++out.duplicates_collapsed;
            continue;
        }
        SemiProbeRow row{s, std::move(vectors), SemiProbeRow::Status::invalid,
                         std::numeric_limits<double>::quiet_NaN(), false};
        try {
            PwtSpec perturbed(base.domain(), branches);
            GridAttractor res = attractor_grid(perturbed, cap);
            row.status = res.stabilized() ? SemiProbeRow::Status::stabilized
                                          : SemiProbeRow::Status::cap_reached;
            row.directed = directed_against(to_ref, res.set);
            row.within_eps = res.set.subset_of(eps_hull);
            ++out.valid_count;
            out.max_directed = std::max(out.max_directed, row.directed);
            if (row.within_eps) ++out.within_count;
        } catch (const ValidationError&) {
            // perturbation broke self-mapping; keep the row as invalid
        }
        out.rows.push_back(std::move(row));
    }
    return out;
}

std::string probe_csv(const SemiProbeResult& result, double radius, double eps) {
    std::string out = "sample_id,vectors,status,directed_hausdorff,within_epsilon\n";
    for (const auto& row : result.rows) {
        out += std::to_string(row.sample_id) + ",";
        for (std::size_t k = 0; k < row.vectors.size(); ++k) {
            if (k) out += ";";
            out += fmt_double(row.vectors[k].x) + ";" + fmt_double(row.vectors[k].y);
        }
        switch (row.status) {
            case SemiProbeRow::Status::stabilized:
                out += ",stabilized," + fmt_double(row.directed) + "," +
                       (row.within_eps ? "1" : "0");
                break;
            case SemiProbeRow::Status::cap_reached:
                out += ",cap_reached," + fmt_double(row.directed) + "," +
                       (row.within_eps ? "1" : "0");
                break;
            case SemiProbeRow::Status::invalid:
                out += ",invalid,,";
                break;
        }
        out += "\n";
    }
    out += "# radius=" + fmt_double(radius) + " epsilon=" + fmt_double(eps) + "\n";
    out += "# max_directed=" + fmt_double(result.max_directed) +
           " within_epsilon=" + std::to_string(result.within_count) + "/" +
           std::to_string(result.valid_count) +
           " duplicates_collapsed=" + std::to_string(result.duplicates_collapsed) + "\n";
    return out;
}

std::vector<ScaleRow> resolution_scaling(const RegionSpec& omega,
                                         const std::vector<std::pair<RegionSpec, Vec2>>& branches,
                                         const GridGeometry& base, const std::vector<int>& nx_list,
                                         int cap) {
    if (nx_list.empty()) throw ValidationError("resolution_scaling: no resolutions");
    for (std::size_t k = 1; k < nx_list.size(); ++k) {
        if (nx_list[k] <= nx_list[k - 1])
            throw ValidationError("resolution_scaling: resolutions must strictly refine (h down)");
    }
    std::vector<ScaleRow> rows;
    for (int nx : nx_list) {
        if (nx < 1) throw ValidationError("resolution_scaling: resolution must be positive");
        GridGeometry g = base;
        g.nx = nx;
        g.ny = std::max(1, static_cast<int>(std::lround(
                               static_cast<double>(base.ny) * nx / base.nx)));
        g.h = base.h * base.nx / nx;
        PwtSpec spec(omega, branches, g);
        GridAttractor res = attractor_grid(spec, cap);
        rows.push_back({nx, g.h, res.stabilized(), res.steps, res.set.popcount(),
                        static_cast<double>(res.set.popcount()) * g.h * g.h});
    }
    return rows;
}

std::string scale_csv(const std::vector<ScaleRow>& rows) {
    std::string out = "nx,h,status,steps,attractor_cells,attractor_area\n";
    bool all_capped = !rows.empty();
    for (const auto& row : rows) {
        out += std::to_string(row.nx) + "," + fmt_double(row.h) + "," +
               (row.stabilized ? "stabilized" : "cap_reached") + "," + std::to_string(row.steps) +
               "," + std::to_string(row.attractor_cells) + "," + fmt_double(row.attractor_area) +
               "\n";
        all_capped = all_capped && !row.stabilized;
    }
    if (all_capped) out += "# infinite-type evidence: cap_reached at all resolutions\n";
    return out;
}

}  // namespace pwt
