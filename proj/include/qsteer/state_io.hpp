#pragma once

#include <filesystem>
#include <string>

#include "qsteer/density_matrix.hpp"
#include "qsteer/errors.hpp"

namespace qsteer {

/// Density-matrix JSON format:
///   {"convention": "spin" | "two_qubit",
///    "rows": [[[re, im] x4] x4]}
/// Shape violations raise ParseError with the JSON path of the bad node;
/// syntax errors carry the byte offset.
DensityMatrix parse_density_json(const std::string& text);

DensityMatrix read_density_json(const std::filesystem::path& path);

std::string density_to_json(const DensityMatrix& rho);

void write_density_json(const std::filesystem::path& path, const DensityMatrix& rho);

} // namespace qsteer
