#pragma once

namespace wobbly {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace wobbly
