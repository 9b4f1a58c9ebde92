#pragma once

namespace ahs {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace ahs
