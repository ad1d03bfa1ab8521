#pragma once

namespace gridra {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace gridra
