#include "pwt/image_io.hpp"

#include <fstream>

#include "pwt/errors.hpp"

namespace pwt {

std::string render_ppm(const RenderLayers& layers) {
    if (layers.layers.empty()) throw ValidationError("render_ppm: no layers");
    const GridGeometry& g = layers.layers.front().first.geometry();
    for (const auto& [mask, color] : layers.layers) {
        if (!(mask.geometry() == g)) throw ValidationError("render_ppm: geometry mismatch");
    }
    std::string out = "P6\n" + std::to_string(g.nx) + " " + std::to_string(g.ny) + "\n255\n";
    out.reserve(out.size() + static_cast<std::size_t>(g.cells()) * 3);
    for (int j = g.ny - 1; j >= 0; --j) {  // row 0 = top
        for (int i = 0; i < g.nx; ++i) {
            Rgb px = layers.background;
            for (const auto& [mask, color] : layers.layers) {
                if (mask.test(i, j)) px = color;
            }
            out.push_back(static_cast<char>(px.r));
            out.push_back(static_cast<char>(px.g));
            out.push_back(static_cast<char>(px.b));
        }
    }
    return out;
}

std::string pgm_bytes(const GridSet& mask) {
    const GridGeometry& g = mask.geometry();
    std::string out = "P5\n" + std::to_string(g.nx) + " " + std::to_string(g.ny) + "\n255\n";
    out.reserve(out.size() + static_cast<std::size_t>(g.cells()));
    for (int j = g.ny - 1; j >= 0; --j) {
        for (int i = 0; i < g.nx; ++i) {
            out.push_back(static_cast<char>(mask.test(i, j) ? 255 : 0));
        }
    }
    return out;
}

GridSet parse_pgm(const std::string& bytes, double h, Wrap wrap) {
    std::size_t pos = 0;
    auto token = [&]() -> std::string {
        while (pos < bytes.size() && (bytes[pos] == ' ' || bytes[pos] == '\n' ||
                                      bytes[pos] == '\t' || bytes[pos] == '\r'))
            ++pos;
        std::size_t start = pos;
        while (pos < bytes.size() && bytes[pos] != ' ' && bytes[pos] != '\n' &&
               bytes[pos] != '\t' && bytes[pos] != '\r')
            ++pos;
        return bytes.substr(start, pos - start);
    };
    if (token() != "P5") throw IoError("parse_pgm: not a binary PGM (P5)");
    int nx = 0, ny = 0, maxval = 0;
    try {
        nx = std::stoi(token());
        ny = std::stoi(token());
        maxval = std::stoi(token());
    } catch (const std::exception&) {
        throw IoError("parse_pgm: malformed header");
    }
    if (nx <= 0 || ny <= 0 || maxval != 255) throw IoError("parse_pgm: unsupported header");
    ++pos;  // single whitespace byte after maxval
    if (bytes.size() - pos < static_cast<std::size_t>(nx) * ny)
        throw IoError("parse_pgm: truncated pixel data");
    GridSet out(GridGeometry{0.0, 0.0, h, nx, ny, wrap});
    for (int j = ny - 1; j >= 0; --j) {
        for (int i = 0; i < nx; ++i) {
            unsigned char v = static_cast<unsigned char>(bytes[pos++]);
            if (v != 0) out.set(i, j);
        }
    }
    return out;
}

void write_file(const std::string& path, const std::string& bytes) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw IoError("cannot open for writing: " + path);
    f.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    if (!f) throw IoError("write failed: " + path);
}

std::string read_file(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw IoError("cannot open: " + path);
    std::string out((std::istreambuf_iterator<char>(f)), std::istreambuf_iterator<char>());
    return out;
}

}  // namespace pwt
