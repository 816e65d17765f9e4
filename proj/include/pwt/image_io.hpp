#pragma once

#include <string>
#include <vector>

#include "pwt/grid.hpp"

namespace pwt {

struct Rgb {
    unsigned char r = 0, g = 0, b = 0;
    bool operator==(const Rgb&) const = default;
};

/// Ordered color layers over one geometry; later layers overdraw earlier
/// ones, unset cells are transparent.
struct RenderLayers {
    Rgb background{255, 255, 255};
    std::vector<std::pair<GridSet, Rgb>> layers;
};

/// Binary PPM ("P6\n<nx> <ny>\n255\n" + rows top-down); deterministic bytes.
std::string render_ppm(const RenderLayers& layers);

/// Binary PGM ("P5\n<nx> <ny>\n255\n"), 255 = set, 0 = unset, row 0 = top.
std::string pgm_bytes(const GridSet& mask);

/// Strict parser for the PGM emitted above. Cell size / origin / wrap are
/// not stored in the file; callers provide them (defaults: unit cells, flat).
GridSet parse_pgm(const std::string& bytes, double h = 1.0, Wrap wrap = Wrap::none);

void write_file(const std::string& path, const std::string& bytes);
std::string read_file(const std::string& path);

}  // namespace pwt
