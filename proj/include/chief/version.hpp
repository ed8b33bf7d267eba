#pragma once

namespace chief {

inline constexpr const char* engine_version = "chief 0.1.0";

} // namespace chief
