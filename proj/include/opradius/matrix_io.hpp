#pragma once

#include <string>

#include <json.hpp>

#include "opradius/cmatrix.hpp"

namespace opradius {

using Json = nlohmann::ordered_json;

/// Parses {"rows": N, "cols": M, "entries": [[re, im], ...]} (row-major).
/// Rejects NaN/Inf entries and length mismatches.
CMatrix matrix_from_json(const Json& j);
Json matrix_to_json(const CMatrix& m);

CMatrix load_matrix(const std::string& path);
void save_matrix(const std::string& path, const CMatrix& m);

} // namespace opradius
