#pragma once

#include <string>

namespace sesqui::cli {

// Writes to a sibling temporary file, then renames over `path`. On failure the
// target is untouched and std::runtime_error is thrown.
void write_file_atomic(const std::string& path, const std::string& content);

} // namespace sesqui::cli
