#pragma once

namespace orient {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace orient
