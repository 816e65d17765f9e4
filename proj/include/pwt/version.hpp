#pragma once

namespace pwt {

inline constexpr const char* kEngineVersion = "pwt 0.1.0";

}  // namespace pwt
