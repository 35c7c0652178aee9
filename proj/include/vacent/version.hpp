#pragma once

namespace vacent {

inline constexpr const char* version = "0.1.0";

}  // namespace vacent
