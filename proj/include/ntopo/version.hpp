#pragma once

namespace ntopo {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace ntopo
