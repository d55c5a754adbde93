#pragma once

namespace vbsge {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace vbsge
