#pragma once

#include <charconv>
#include <cstdint>
#include <string>
#include <string_view>

namespace pwt {

/// Shortest round-trip decimal form; deterministic across runs.
inline std::string fmt_double(double v) {
    char buf[32];
    auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return {buf, res.ptr};
}

/// FNV-1a 64-bit digest as fixed-width hex, used for output manifests.
inline std::string fnv1a64_hex(std::string_view bytes) {
    std::uint64_t hash = 1469598103934665603ull;
    for (unsigned char c : bytes) {
        hash ^= c;
        hash *= 1099511628211ull;
    }
    char buf[17];
    static const char* digits = "0123456789abcdef";
    for (int i = 15; i >= 0; --i) {
        buf[i] = digits[hash & 0xf];
        hash >>= 4;
    }
    buf[16] = '\0';
    return buf;
}

}  // namespace pwt
