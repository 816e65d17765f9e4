#pragma once

#include <array>
#include <optional>
#include <string>

#include "pwt/torus.hpp"

namespace pwt {

/// d(F^n(Omega), A_ref) for n = 0..steps, where A_ref is the attractor (or
/// the last iterate at cap, flagged by stabilized=false). The directed
/// distance is used: A_ref is contained in every iterate, so the opposite
/// direction is identically zero.
struct ConvergenceCurve {
    bool stabilized;
    int steps;
    std::vector<double> distance;
};
ConvergenceCurve convergence_curve(const PwtSpec& spec, int cap);
std::string curve_csv(const ConvergenceCurve& curve);

/// Parameter sweep over torus double rotations: either `count` seeded random
/// samples of (v0, v1), or a cartesian grid over per-component ranges.
/// wall_ms is recorded in the rows only when record_timing is set; the
/// default keeps the CSV byte-deterministic (timings always go to the run
/// manifest, never into the determinism contract).
struct SweepConfig {
    std::uint64_t seed = 0;
    int count = 0;
    int cap = 1000;
    bool tie_vectors = false;  // sample v1 := v0 (bijective rotations)
    bool record_timing = false;
    struct Range {
        double lo;
        double hi;
        int steps;
    };
    std::optional<std::array<Range, 4>> ranges;  // v0x, v0y, v1x, v1y
};

struct SweepRow {
    int sample_id;
    Vec2 v0, v1;
    bool stabilized;
    int steps;
    std::int64_t attractor_cells;
    double wall_ms;
};

struct SweepResult {
    std::vector<SweepRow> rows;
    double stabilized_fraction;
    std::vector<double> wall_ms;  // always measured, destined for the manifest
};

SweepResult finite_type_sweep(const RegionSpec& region, const GridGeometry& geom,
                              const SweepConfig& config);
std::string sweep_csv(const SweepResult& result, bool record_timing);

/// Perturbs every branch vector of `base` within a ball of the given radius
/// (seeded, uniform), snaps, collapses duplicate snapped offsets, and
/// compares each perturbed attractor against the base attractor with the
/// directed pseudo-distance. Planar perturbations that fail self-mapping
/// validation are reported as invalid rather than discarded silently.
/// Throws DomainError when the base spec itself does not stabilize.
struct SemiProbeRow {
    int sample_id;
    std::vector<Vec2> vectors;
    enum class Status { stabilized, cap_reached, invalid } status;
    double directed;  // d(X_b, X_a); NaN when invalid
    bool within_eps;  // X_b ⊆ (X_a)_eps
};

struct SemiProbeResult {
    std::vector<SemiProbeRow> rows;
    int base_steps;
    double max_directed;
    int within_count;
    int valid_count;
    int duplicates_collapsed;
};

SemiProbeResult semicontinuity_probe(const PwtSpec& base, double radius, int samples, double eps,
                                     std::uint64_t seed, int cap);
std::string probe_csv(const SemiProbeResult& result, double radius, double eps);

/// Re-rasterizes one region-level map at several resolutions and reports the
/// stabilization step at each; a step count that keeps growing and finally
/// hits the cap as h shrinks is evidence (not proof) of infinite type.
struct ScaleRow {
    int nx;
    double h;
    bool stabilized;
    int steps;
    std::int64_t attractor_cells;
    double attractor_area;  // cells * h^2
};

std::vector<ScaleRow> resolution_scaling(const RegionSpec& omega,
                                         const std::vector<std::pair<RegionSpec, Vec2>>& branches,
                                         const GridGeometry& base, const std::vector<int>& nx_list,
                                         int cap);
std::string scale_csv(const std::vector<ScaleRow>& rows);

}  // namespace pwt
