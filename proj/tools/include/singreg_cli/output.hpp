#pragma once

#include "singreg_cli/config.hpp"

#include <filesystem>
#include <string>

namespace singreg::cli {

json report_json(const intersect::Problem& problem, const intersect::IntersectionReport& report);

/// Schema 1: window, counts legend, feasible components (with their cells)
/// and the zero-count components.
json regions_json(const intersect::Problem& problem, const regions::RegionMap& map);

/// One row per leaf: axis values, depth, counts, total, feasible, reason.
std::string grid_csv(const regions::RegionMap& map);

/// Canonical text form: two-space indent, trailing newline.
std::string dump(const json& value);

/// Writes through a temporary file in the same directory and renames it.
void write_atomic(const std::filesystem::path& path, const std::string& content);

}  // namespace singreg::cli
