#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include <json.hpp>

#include "distdist/point.hpp"

namespace distdist::io {

// {"label": ..., "points": [["x", "y"], ...]} with canonical rational strings.
nlohmann::json to_json(const PointSet& p);
// Also accepts JSON integers as coordinates. Throws InputError.
PointSet pointset_from_json(const nlohmann::json& j);

std::string to_json_text(const PointSet& p);
PointSet parse_json_text(std::string_view text);

// "x,y" header followed by one rational pair per line.
std::string to_csv_text(const PointSet& p);
// Header optional; blank lines and lines starting with '#' are skipped.
PointSet parse_csv_text(std::string_view text, std::string label = {});

// Chooses CSV for a ".csv" extension, JSON otherwise.
PointSet read_pointset(const std::filesystem::path& path);
void write_pointset(const std::filesystem::path& path, const PointSet& p);

}  // namespace distdist::io
