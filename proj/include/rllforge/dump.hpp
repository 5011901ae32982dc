#pragma once

// Matrix dump format: {"dim": d, "entries": [[row, col, "scalar"], ...]},
// 1-based, entries sorted by (row, col).

#include "rllforge/matrix.hpp"

#include <json.hpp>
#include <string>

namespace rllforge {

nlohmann::ordered_json dump_matrix_json(const SparseMatrix& m);
// the same JSON with one entry per line
std::string dump_matrix_text(const SparseMatrix& m);
// throws ParseError on malformed input
SparseMatrix parse_matrix_json(const nlohmann::json& j);
SparseMatrix parse_matrix_dump(const std::string& text);

}  // namespace rllforge
