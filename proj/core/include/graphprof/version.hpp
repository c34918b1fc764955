#pragma once

namespace graphprof {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace graphprof
