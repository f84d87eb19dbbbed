#pragma once

#include <string>

namespace tgftflow {

/// git-describe-style identifier baked in at configure time.
const char* build_id();

/// Current schema version of all JSON outputs.
inline constexpr int kSchemaVersion = 1;

/// Write text atomically: a partially written file is removed on error.
/// Throws std::runtime_error with the path on IO failure.
void write_file(const std::string& path, const std::string& contents);

}  // namespace tgftflow
