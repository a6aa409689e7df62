#pragma once

namespace ptt {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace ptt
