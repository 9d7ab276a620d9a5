#pragma once

namespace scalemap {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace scalemap
