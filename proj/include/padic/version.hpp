#pragma once

namespace padic {

inline constexpr const char* kToolName = "padic-gibbs";
inline constexpr const char* kVersion = "0.1.0";
inline constexpr int kJsonSchemaVersion = 1;

} // namespace padic
