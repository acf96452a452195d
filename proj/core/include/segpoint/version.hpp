#pragma once

namespace segpoint {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace segpoint
