#pragma once

namespace kstab {

inline constexpr const char* kToolName = "kstab";
inline constexpr const char* kToolVersion = "0.1.0";

}  // namespace kstab
