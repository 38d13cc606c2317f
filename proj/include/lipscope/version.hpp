#pragma once

namespace lipscope {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace lipscope
