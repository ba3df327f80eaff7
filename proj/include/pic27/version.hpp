#pragma once

namespace pic27 {

inline constexpr const char* kVersion = "0.1.0";

} // namespace pic27
