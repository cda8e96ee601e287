#pragma once

#include <string>
#include <string_view>

#include "specjump/resolution.hpp"

namespace specjump {

struct LoadOptions {
  bool force = false;  // accept data that fails validate
};

/// Reads resolution data from JSON text. Besides `components` and
/// `intersections`, the optional `germ` (polynomial text) and `charts`
/// (array of {id, x, y} in u, v) written by store are accepted.
ResolutionData parse_resolution(std::string_view text, const LoadOptions& options = {});
ResolutionData load_resolution(const std::string& path, const LoadOptions& options = {});

/// Pretty-printed JSON, two-space indent, trailing newline.
std::string resolution_to_json(const ResolutionData& data);
void store_resolution(const ResolutionData& data, const std::string& path);

}  // namespace specjump
