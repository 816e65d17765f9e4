#include "pwt/spec_json.hpp"

#include <json.hpp>

#include "pwt/errors.hpp"

namespace pwt {

namespace {

using nlohmann::json;

json parse_text(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) throw ValidationError("spec: malformed JSON");
    return j;
}

const json& field(const json& j, const char* name) {
    auto it = j.find(name);
    if (it == j.end()) throw ValidationError(std::string("spec: missing field '") + name + "'");
    return *it;
}

Rational rational_field(const json& j) {
    if (!j.is_string())
        throw ValidationError("spec: rationals must be strings \"p/q\" (exactness contract)");
    return Rational::from_string(j.get<std::string>());
}

Interval1 interval_field(const json& j) {
    if (!j.is_array() || j.size() != 2)
        throw ValidationError("spec: interval must be a [lo, hi] pair");
    return {rational_field(j[0]), rational_field(j[1])};
}

double number_field(const json& j) {
    if (!j.is_number()) throw ValidationError("spec: expected a number");
    return j.get<double>();
}

Vec2 vec2_field(const json& j) {
    if (!j.is_array() || j.size() != 2) throw ValidationError("spec: expected an [x, y] pair");
    return {number_field(j[0]), number_field(j[1])};
}

RegionSpec region_field(const json& j) {
    if (!j.is_object()) throw ValidationError("spec: region must be a tagged object");
    std::string type = field(j, "type").get<std::string>();
    if (type == "rect") return RegionSpec::rect(vec2_field(field(j, "lo")), vec2_field(field(j, "hi")));
    if (type == "disk")
        return RegionSpec::disk(vec2_field(field(j, "center")), number_field(field(j, "radius")));
    if (type == "polygon") {
        std::vector<Vec2> verts;
        for (const auto& v : field(j, "vertices")) verts.push_back(vec2_field(v));
        return RegionSpec::polygon(std::move(verts));
    }
    if (type == "complement")
        return RegionSpec::complement_within(region_field(field(j, "region")),
                                             region_field(field(j, "outer")));
    if (type == "union" || type == "intersection") {
        std::vector<RegionSpec> parts;
        for (const auto& p : field(j, "parts")) parts.push_back(region_field(p));
        return type == "union" ? RegionSpec::union_of(std::move(parts))
                               : RegionSpec::intersection_of(std::move(parts));
    }
    throw ValidationError("spec: unknown region type '" + type + "'");
}

GridGeometry grid_field(const json& j, Wrap forced_wrap, bool force) {
    GridGeometry g;
    g.nx = field(j, "nx").get<int>();
    g.ny = field(j, "ny").get<int>();
    g.h = number_field(field(j, "h"));
    if (auto it = j.find("origin"); it != j.end()) {
        Vec2 o = vec2_field(*it);
        g.ox = o.x;
        g.oy = o.y;
    }
    std::string wrap = "none";
    if (auto it = j.find("wrap"); it != j.end()) wrap = it->get<std::string>();
    if (wrap != "none" && wrap != "torus")
        throw ValidationError("spec: wrap must be \"none\" or \"torus\"");
    g.wrap = wrap == "torus" ? Wrap::torus : Wrap::none;
    if (force) g.wrap = forced_wrap;
    g.validate();
    return g;
}

}  // namespace

ItmSpec parse_itm_spec(const std::string& text) {
    json j = parse_text(text);
    std::string mode = field(j, "mode").get<std::string>();
    if (mode != "line" && mode != "circle")
        throw ValidationError("spec: mode must be \"line\" or \"circle\"");
    Interval1 omega = interval_field(field(j, "omega"));
    std::vector<ItmBranch> branches;
    for (const auto& b : field(j, "branches")) {
        branches.push_back({interval_field(field(b, "region")), rational_field(field(b, "vector"))});
    }
    return {omega, std::move(branches), mode == "line" ? ItmMode::line : ItmMode::circle};
}

RegionSpec parse_region(const std::string& text) { return region_field(parse_text(text)); }

PwtSpecFile parse_pwt_spec(const std::string& text) {
    json j = parse_text(text);
    RegionSpec omega = region_field(field(j, "omega"));
    std::vector<std::pair<RegionSpec, Vec2>> branches;
    for (const auto& b : field(j, "branches")) {
        branches.emplace_back(region_field(field(b, "region")), vec2_field(field(b, "vector")));
    }
    GridGeometry geom = grid_field(field(j, "grid"), Wrap::none, false);
    return {std::move(omega), std::move(branches), geom};
}

TorusSpecFile parse_torus_spec(const std::string& text) {
    json j = parse_text(text);
    RegionSpec region = region_field(field(j, "region"));
    Vec2 v0 = vec2_field(field(j, "v0"));
    Vec2 v1 = vec2_field(field(j, "v1"));
    GridGeometry geom = grid_field(field(j, "grid"), Wrap::torus, true);
    return {std::move(region), v0, v1, geom};
}

}  // namespace pwt
