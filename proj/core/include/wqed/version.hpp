#pragma once

namespace wqed {

inline constexpr const char* kVersion = "0.1.0";

// Stamped into config files, record files and manifests. Bump on breaking
// format changes.
inline constexpr int kSchemaVersion = 1;

}  // namespace wqed
