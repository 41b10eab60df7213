#pragma once

namespace fmra {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace fmra
