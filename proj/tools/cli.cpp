#include "cli.hpp"

#include <CLI11.hpp>
#include <chrono>
#include <filesystem>
#include <json.hpp>

#include "pwt/distance.hpp"
#include "pwt/errors.hpp"
#include "pwt/experiments.hpp"
#include "pwt/fmt.hpp"
#include "pwt/image_io.hpp"
#include "pwt/spec_json.hpp"
#include "pwt/version.hpp"

namespace pwt {

namespace {

using nlohmann::json;

// Signals exit code 2.
struct CapRequireFinite {
    int steps;
};

struct Outputs {
    std::string dir;
    json files = json::object();

    bool enabled() const { return !dir.empty(); }
    void write(const std::string& name, const std::string& bytes) {
        if (!enabled()) return;
        std::filesystem::create_directories(dir);
        std::string path = dir + "/" + name;
        write_file(path, bytes);
        files[name] = fnv1a64_hex(bytes);
    }
    void finish(json config, const std::vector<Vec2>& residuals,
                const std::vector<double>& wall_ms) {
        if (!enabled()) return;
        json m;
        m["engine_version"] = kEngineVersion;
        m["config"] = std::move(config);
        json res = json::array();
        for (const auto& r : residuals) res.push_back({r.x, r.y});
        m["snapped_residuals"] = std::move(res);
        m["wall_ms"] = wall_ms;
        m["outputs"] = files;
        write_file(dir + "/manifest.json", m.dump(2) + "\n");
    }
};

double wall_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
        .count();
}

std::string read_spec(const std::string& path) { return read_file(path); }

// Accepts either a 2-D map spec ("omega"/"branches") or a torus double
// rotation ("region"/"v0"/"v1"); both reduce to region-level map pieces.
PwtSpecFile load_map_pieces(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) throw ValidationError("spec: malformed JSON");
    if (j.contains("omega")) return parse_pwt_spec(text);
    TorusSpecFile t = parse_torus_spec(text);
    RegionSpec omega = RegionSpec::rect({t.geom.ox, t.geom.oy},
                                        {t.geom.ox + t.geom.nx * t.geom.h,
                                         t.geom.oy + t.geom.ny * t.geom.h});
    std::vector<std::pair<RegionSpec, Vec2>> branches = {
        {t.region, t.v0}, {RegionSpec::complement_within(t.region, omega), t.v1}};
    return {std::move(omega), std::move(branches), t.geom};
}

std::vector<Vec2> residuals_of(const PwtSpec& spec) {
    std::vector<Vec2> out;
    for (const auto& b : spec.branches()) out.push_back(b.snap.residual);
    return out;
}

Rgb parse_color(const std::string& hex) {
    if (hex.size() != 6 || hex.find_first_not_of("0123456789abcdefABCDEF") != std::string::npos)
        throw ValidationError("color must be RRGGBB hex: '" + hex + "'");
    auto byte = [&](int k) {
        return static_cast<unsigned char>(std::stoi(hex.substr(k, 2), nullptr, 16));
    };
    return {byte(0), byte(2), byte(4)};
}

std::string area_csv(const std::vector<std::int64_t>& trace) {
    std::string out = "n,cells\n";
    for (std::size_t n = 0; n < trace.size(); ++n)
        out += std::to_string(n) + "," + std::to_string(trace[n]) + "\n";
    return out;
}

std::string itm_trace_csv(const std::vector<Rational>& trace) {
    std::string out = "n,total_length\n";
    for (std::size_t n = 0; n < trace.size(); ++n)
        out += std::to_string(n) + "," + trace[n].to_string() + "\n";
    return out;
}

int run_itm(const std::string& spec_path, long cap, bool require_finite, const std::string& out_dir,
            std::ostream& out) {
    std::string text = read_spec(spec_path);
    ItmSpec spec = parse_itm_spec(text);
    auto t0 = std::chrono::steady_clock::now();
    ItmAttractor res = attractor_exact(spec, cap);
    double ms = wall_since(t0);
    if (res.finite()) {
        out << "finite N=" << res.steps << " A=" << to_string(res.set) << "\n";
    } else {
        out << "cap_reached N=" << res.steps << " len=" << res.set.length().to_string()
            << " A=" << to_string(res.set) << "\n";
    }
    Outputs outputs{out_dir};
    outputs.write("length_trace.csv", itm_trace_csv(res.length_trace));
    outputs.finish({{"command", "itm run"},
                    {"spec_digest", fnv1a64_hex(text)},
                    {"cap", cap},
                    {"require_finite", require_finite}},
                   {}, {ms});
    if (!res.finite() && require_finite) throw CapRequireFinite{res.steps};
    return 0;
}

int run_grid(const std::string& spec_path, int cap, bool require_finite,
             const std::string& out_dir, std::ostream& out) {
    std::string text = read_spec(spec_path);
    PwtSpec spec = load_map_pieces(text).build();
    auto t0 = std::chrono::steady_clock::now();
    GridAttractor res = attractor_grid(spec, cap);
    double ms = wall_since(t0);
    out << (res.stabilized() ? "stabilized" : "cap_reached") << " N=" << res.steps
        << " cells=" << res.set.popcount() << "\n";
    Outputs outputs{out_dir};
    outputs.write("attractor.pgm", pgm_bytes(res.set));
    outputs.write("area_trace.csv", area_csv(res.area_trace));
    outputs.finish({{"command", "grid run"},
                    {"spec_digest", fnv1a64_hex(text)},
                    {"cap", cap},
                    {"require_finite", require_finite}},
                   residuals_of(spec), {ms});
    if (!res.stabilized() && require_finite) throw CapRequireFinite{res.steps};
    return 0;
}

int run_torus(const std::string& spec_path, int cap, int frames, bool require_finite,
              const std::string& out_dir, std::ostream& out) {
    const Rgb kBlue{60, 60, 230}, kRed{220, 50, 40}, kGreen{40, 160, 60};
    std::string text = read_spec(spec_path);
    TorusSpecFile file = parse_torus_spec(text);
    TorusSpec spec = file.build();
    auto t0 = std::chrono::steady_clock::now();
    GridAttractor res = attractor_grid(spec.map(), cap);
    double ms = wall_since(t0);
    out << (res.stabilized() ? "stabilized" : "cap_reached") << " N=" << res.steps
        << " cells=" << res.set.popcount() << "\n";

    Outputs outputs{out_dir};
    if (outputs.enabled()) {
        GridSet full(spec.geometry(), true);
        GridSet k = full;
        for (int n = 0; n <= frames; ++n) {
            RenderLayers layers;
            layers.layers.push_back({full - k, kRed});
            layers.layers.push_back({k, kBlue});
            if (n == 0) layers.layers.push_back({spec.region_mask(), kGreen});
            char name[32];
            std::snprintf(name, sizeof(name), "frame_%03d.ppm", n);
            outputs.write(name, render_ppm(layers));
            if (n < frames) k = double_rotation_apply(spec, k);
        }
        outputs.write("attractor.pgm", pgm_bytes(res.set));
        outputs.write("lost.pgm", pgm_bytes(full - res.set));
        RenderLayers final_layers;
        final_layers.layers.push_back({full - res.set, kRed});
        final_layers.layers.push_back({res.set, kBlue});
        outputs.write("attractor.ppm", render_ppm(final_layers));
        outputs.write("area_trace.csv", area_csv(res.area_trace));
    }
    outputs.finish({{"command", "torus run"},
                    {"spec_digest", fnv1a64_hex(text)},
                    {"cap", cap},
                    {"frames", frames},
                    {"require_finite", require_finite}},
                   residuals_of(spec.map()), {ms});
    if (!res.stabilized() && require_finite) throw CapRequireFinite{res.steps};
    return 0;
}

int run_sweep(const std::string& spec_path, const SweepConfig& cfg, const std::string& out_dir,
              std::ostream& out) {
    std::string text = read_spec(spec_path);
    TorusSpecFile file = parse_torus_spec(text);
    SweepResult result = finite_type_sweep(file.region, file.geom, cfg);
    std::string csv = sweep_csv(result, cfg.record_timing);
    out << "samples=" << result.rows.size()
        << " stabilized_fraction=" << fmt_double(result.stabilized_fraction) << "\n";
    Outputs outputs{out_dir};
    outputs.write("sweep.csv", csv);
    outputs.finish({{"command", "sweep"},
                    {"spec_digest", fnv1a64_hex(text)},
                    {"seed", cfg.seed},
                    {"count", cfg.count},
                    {"cap", cfg.cap},
                    {"tie_vectors", cfg.tie_vectors},
                    {"timing", cfg.record_timing}},
                   {}, result.wall_ms);
    return 0;
}

int run_probe(const std::string& spec_path, double radius, int samples, double eps,
              std::uint64_t seed, int cap, const std::string& out_dir, std::ostream& out) {
    std::string text = read_spec(spec_path);
    PwtSpec base = load_map_pieces(text).build();
    auto t0 = std::chrono::steady_clock::now();
    SemiProbeResult result = semicontinuity_probe(base, radius, samples, eps, seed, cap);
    double ms = wall_since(t0);
    out << "base_N=" << result.base_steps << " max_directed=" << fmt_double(result.max_directed)
        << " within_epsilon=" << result.within_count << "/" << result.valid_count << "\n";
    Outputs outputs{out_dir};
    outputs.write("probe.csv", probe_csv(result, radius, eps));
    outputs.finish({{"command", "probe semicontinuity"},
                    {"spec_digest", fnv1a64_hex(text)},
                    {"radius", radius},
                    {"samples", samples},
                    {"epsilon", eps},
                    {"seed", seed},
                    {"cap", cap}},
                   residuals_of(base), {ms});
    return 0;
}

int run_curve(const std::string& spec_path, int cap, const std::string& out_dir,
              std::ostream& out) {
    std::string text = read_spec(spec_path);
    PwtSpec spec = load_map_pieces(text).build();
    auto t0 = std::chrono::steady_clock::now();
    ConvergenceCurve curve = convergence_curve(spec, cap);
    double ms = wall_since(t0);
    out << (curve.stabilized ? "stabilized" : "cap_reached") << " N=" << curve.steps << "\n";
    Outputs outputs{out_dir};
    outputs.write("curve.csv", curve_csv(curve));
    outputs.finish({{"command", "curve"},
                    {"spec_digest", fnv1a64_hex(text)},
                    {"cap", cap}},
                   residuals_of(spec), {ms});
    return 0;
}

int run_scale(const std::string& spec_path, const std::vector<int>& resolutions, int cap,
              const std::string& out_dir, std::ostream& out) {
    std::string text = read_spec(spec_path);
    PwtSpecFile file = load_map_pieces(text);
    auto t0 = std::chrono::steady_clock::now();
    auto rows = resolution_scaling(file.omega, file.branches, file.geom, resolutions, cap);
    double ms = wall_since(t0);
    for (const auto& r : rows) {
        out << "nx=" << r.nx << " h=" << fmt_double(r.h) << " "
            << (r.stabilized ? "stabilized" : "cap_reached") << " N=" << r.steps << "\n";
    }
    Outputs outputs{out_dir};
    outputs.write("scale.csv", scale_csv(rows));
    json res_json = json::array();
    for (int r : resolutions) res_json.push_back(r);
    outputs.finish({{"command", "scale"},
                    {"spec_digest", fnv1a64_hex(text)},
                    {"resolutions", res_json},
                    {"cap", cap}},
                   {}, {ms});
    return 0;
}

int run_hausdorff(const std::string& a_path, const std::string& b_path, double h, bool torus,
                  std::ostream& out) {
    GridSet a = parse_pgm(read_file(a_path), h, torus ? Wrap::torus : Wrap::none);
    GridSet b = parse_pgm(read_file(b_path), h, torus ? Wrap::torus : Wrap::none);
    double ab = directed_hausdorff(a, b);
    double ba = directed_hausdorff(b, a);
    out << "d_H=" << fmt_double(std::max(ab, ba)) << " d_AB=" << fmt_double(ab)
        << " d_BA=" << fmt_double(ba) << "\n";
    return 0;
}

int run_render(const std::vector<std::string>& layer_args, const std::string& bg_hex,
               const std::string& out_dir, std::ostream& out) {
    if (out_dir.empty()) throw ValidationError("render: --out is required");
    RenderLayers layers;
    layers.background = parse_color(bg_hex);
    std::vector<std::string> names;
    for (const auto& arg : layer_args) {
        auto colon = arg.rfind(':');
        if (colon == std::string::npos)
            throw ValidationError("render: layer must be <mask.pgm>:<RRGGBB>");
        layers.layers.push_back(
            {parse_pgm(read_file(arg.substr(0, colon))), parse_color(arg.substr(colon + 1))});
        names.push_back(arg.substr(0, colon));
    }
    Outputs outputs{out_dir};
    outputs.write("render.ppm", render_ppm(layers));
    // Re-emit each layer mask so the composite is reconstructible bit-exactly.
    for (std::size_t k = 0; k < layers.layers.size(); ++k) {
        char name[32];
        std::snprintf(name, sizeof(name), "layer_%02zu.pgm", k);
        outputs.write(name, pgm_bytes(layers.layers[k].first));
    }
    json cfg{{"command", "render"}, {"background", bg_hex}};
    cfg["layers"] = names;
    outputs.finish(std::move(cfg), {}, {});
    out << "rendered " << layers.layers.size() << " layers\n";
    return 0;
}

}  // namespace

int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"piecewise translation maps: attractors, metrics, experiments"};
    app.require_subcommand(1);

    std::string spec_path, out_dir;
    long itm_cap = 100000;
    int cap = 5000;
    bool require_finite = false;
    std::uint64_t seed = 0;

    auto add_common = [&](CLI::App* cmd, bool with_cap = true) {
        cmd->add_option("--spec", spec_path, "spec JSON file")->required();
        cmd->add_option("--out", out_dir, "output directory");
        if (with_cap) cmd->add_option("--cap", cap, "iteration cap");
    };

    CLI::App* itm = app.add_subcommand("itm", "exact 1-D engine");
    CLI::App* itm_run = itm->add_subcommand("run", "compute the exact attractor");
    itm_run->add_option("--spec", spec_path, "spec JSON file")->required();
    itm_run->add_option("--out", out_dir, "output directory");
    itm_run->add_option("--cap", itm_cap, "iteration cap");
    itm_run->add_flag("--require-finite", require_finite, "exit 2 when the cap is reached");

    CLI::App* grid = app.add_subcommand("grid", "2-D grid engine");
    CLI::App* grid_run = grid->add_subcommand("run", "compute the grid attractor");
    add_common(grid_run);
    grid_run->add_flag("--require-finite", require_finite, "exit 2 when the cap is reached");

    int frames = 4;
    CLI::App* torus = app.add_subcommand("torus", "double rotations on the torus");
    CLI::App* torus_run = torus->add_subcommand("run", "attractor plus iterate montage");
    add_common(torus_run);
    torus_run->add_option("--frames", frames, "montage frames (iterates 0..k)");
    torus_run->add_flag("--require-finite", require_finite, "exit 2 when the cap is reached");

    int count = 100;
    bool tie_vectors = false, timing = false;
    CLI::App* sweep = app.add_subcommand("sweep", "finite-type parameter sweep");
    add_common(sweep);
    sweep->add_option("--count", count, "number of random samples");
    sweep->add_option("--seed", seed, "sampling seed");
    sweep->add_flag("--tie-vectors", tie_vectors, "sample v1 = v0 (bijective rotations)");
    sweep->add_flag("--timing", timing, "record wall_ms in the CSV (breaks byte determinism)");

    double radius = 0.01, epsilon = 0.01;
    int samples = 50;
    CLI::App* probe = app.add_subcommand("probe", "conjecture probes");
    CLI::App* probe_semi = probe->add_subcommand("semicontinuity", "perturb and compare attractors");
    add_common(probe_semi);
    probe_semi->add_option("--radius", radius, "perturbation radius")->required();
    probe_semi->add_option("--samples", samples, "perturbation samples");
    probe_semi->add_option("--epsilon", epsilon, "neighborhood size")->required();
    probe_semi->add_option("--seed", seed, "sampling seed");

    CLI::App* curve = app.add_subcommand("curve", "convergence curve to the attractor");
    add_common(curve);

    std::vector<int> resolutions;
    CLI::App* scale = app.add_subcommand("scale", "re-run at several resolutions");
    add_common(scale);
    scale->add_option("--resolutions", resolutions, "grid widths, increasing")
        ->required()
        ->delimiter(',');

    std::string pgm_a, pgm_b;
    double pgm_h = 1.0;
    bool pgm_torus = false;
    CLI::App* haus = app.add_subcommand("hausdorff", "distance between two PGM masks");
    haus->add_option("a", pgm_a, "first mask")->required();
    haus->add_option("b", pgm_b, "second mask")->required();
    haus->add_option("--cell", pgm_h, "physical cell size");
    haus->add_flag("--torus", pgm_torus, "wrapped metric");

    std::vector<std::string> layer_args;
    std::string bg_hex = "ffffff";
    CLI::App* render = app.add_subcommand("render", "compose PGM masks into a PPM");
    render->add_option("--layer", layer_args, "<mask.pgm>:<RRGGBB>, bottom to top")->required();
    render->add_option("--bg", bg_hex, "background color RRGGBB");
    render->add_option("--out", out_dir, "output directory")->required();

    std::vector<const char*> argv;
    argv.push_back("pwt");
    for (const auto& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n" << app.help();
        return 1;
    }

    try {
        if (itm_run->parsed()) return run_itm(spec_path, itm_cap, require_finite, out_dir, out);
        if (grid_run->parsed()) return run_grid(spec_path, cap, require_finite, out_dir, out);
        if (torus_run->parsed())
            return run_torus(spec_path, cap, frames, require_finite, out_dir, out);
        if (sweep->parsed()) {
            SweepConfig cfg;
            cfg.seed = seed;
            cfg.count = count;
            cfg.cap = cap;
            cfg.tie_vectors = tie_vectors;
            cfg.record_timing = timing;
            return run_sweep(spec_path, cfg, out_dir, out);
        }
        if (probe_semi->parsed())
            return run_probe(spec_path, radius, samples, epsilon, seed, cap, out_dir, out);
        if (curve->parsed()) return run_curve(spec_path, cap, out_dir, out);
        if (scale->parsed()) return run_scale(spec_path, resolutions, cap, out_dir, out);
        if (haus->parsed()) return run_hausdorff(pgm_a, pgm_b, pgm_h, pgm_torus, out);
        if (render->parsed()) return run_render(layer_args, bg_hex, out_dir, out);
        err << "no subcommand\n" << app.help();
        return 1;
    } catch (const CapRequireFinite& c) {
        err << "cap reached after " << c.steps << " steps with --require-finite\n";
        return 2;
    } catch (const IoError& e) {
        err << "io error: " << e.what() << "\n";
        return 3;
    } catch (const ValidationError& e) {
        err << "spec error: " << e.what() << "\n";
        return 1;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace pwt
