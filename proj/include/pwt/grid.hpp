#pragma once

#include <cstdint>
#include <vector>

#include "pwt/errors.hpp"

namespace pwt {

enum class Wrap { none, torus };

/// Uniform cell grid over a rectangle of physical space. Cell (i,j) has its
/// center at origin + ((i+1/2)h, (j+1/2)h); j counts upward.
struct GridGeometry {
    double ox = 0.0;
    double oy = 0.0;
    double h = 1.0;
    int nx = 0;
    int ny = 0;
    Wrap wrap = Wrap::none;

    double cx(int i) const { return ox + (i + 0.5) * h; }
    double cy(int j) const { return oy + (j + 0.5) * h; }
    std::int64_t cells() const { return static_cast<std::int64_t>(nx) * ny; }
    bool operator==(const GridGeometry&) const = default;

    void validate() const {
        if (nx <= 0 || ny <= 0) throw ValidationError("GridGeometry: nx, ny must be positive");
        if (!(h > 0.0)) throw ValidationError("GridGeometry: cell size must be positive");
    }
};

/// Bitmap of occupied cells over a fixed geometry. Mask algebra is exact;
/// values are treated as immutable once built.
class GridSet {
public:
    GridSet() = default;
    explicit GridSet(GridGeometry g, bool fill = false)
        : geom_(g), bits_(static_cast<std::size_t>(g.cells()), fill ? 1 : 0) {
        geom_.validate();
    }

    const GridGeometry& geometry() const { return geom_; }
    bool test(int i, int j) const { return bits_[idx(i, j)] != 0; }
    void set(int i, int j, bool v = true) { bits_[idx(i, j)] = v ? 1 : 0; }

    std::int64_t popcount() const {
        std::int64_t n = 0;
        for (std::uint8_t b : bits_) n += b;
        return n;
    }
    bool empty() const {
        for (std::uint8_t b : bits_) {
            if (b) return false;
        }
        return true;
    }

    bool operator==(const GridSet& o) const { return geom_ == o.geom_ && bits_ == o.bits_; }

    bool subset_of(const GridSet& o) const {
        require_same_geometry(o);
        for (std::size_t k = 0; k < bits_.size(); ++k) {
            if (bits_[k] && !o.bits_[k]) return false;
        }
        return true;
    }

    friend GridSet operator|(const GridSet& a, const GridSet& b) {
        a.require_same_geometry(b);
        GridSet out = a;
        for (std::size_t k = 0; k < out.bits_.size(); ++k) out.bits_[k] |= b.bits_[k];
        return out;
    }
    friend GridSet operator&(const GridSet& a, const GridSet& b) {
        a.require_same_geometry(b);
        GridSet out = a;
        for (std::size_t k = 0; k < out.bits_.size(); ++k) out.bits_[k] &= b.bits_[k];
        return out;
    }
    /// Set difference a \ b.
    friend GridSet operator-(const GridSet& a, const GridSet& b) {
        a.require_same_geometry(b);
        GridSet out = a;
        for (std::size_t k = 0; k < out.bits_.size(); ++k)
            out.bits_[k] = static_cast<std::uint8_t>(out.bits_[k] & ~b.bits_[k] & 1);
        return out;
    }
    GridSet complement() const {
        GridSet out = *this;
        for (auto& b : out.bits_) b = static_cast<std::uint8_t>(b ^ 1);
        return out;
    }

    const std::vector<std::uint8_t>& raw() const { return bits_; }

    void require_same_geometry(const GridSet& o) const {
        if (!(geom_ == o.geom_)) throw ValidationError("GridSet: geometry mismatch");
    }

private:
    GridGeometry geom_;
    std::vector<std::uint8_t> bits_;
    std::size_t idx(int i, int j) const {
        return static_cast<std::size_t>(j) * static_cast<std::size_t>(geom_.nx) +
               static_cast<std::size_t>(i);
    }
};

}  // namespace pwt
