#pragma once

namespace kitaev {

inline constexpr const char* kVersion = "1.0.0";

}  // namespace kitaev
