#pragma once

#include "grit/error.hpp"
#include "grit/groups.hpp"
#include "grit/laurent.hpp"
#include "grit/matrix.hpp"
#include "grit/symwedge.hpp"

#include <json.hpp>

#include <string>

namespace grit::io {

using json = nlohmann::ordered_json;

/// Parses JSON text; syntax errors become ParseError with the 0-based byte offset.
json parse_json(const std::string& text);
/// Rethrows e with "where: " in front, keeping its position.
[[noreturn]] void rethrow_in(const std::string& where, const ParseError& e);
/// Reads and parses a file. A missing file raises DomainError.
json load_json(const std::string& path);

/// {"n": int, "weights": [int], "p": {"i,j": "<polynomial>"}, "metadata": {...}}
/// with metadata optional. Entries that fail to parse raise ParseError naming
/// the key and the offset inside the entry text.
GroupPresentation presentation_from_json(const json& j);
json presentation_to_json(const GroupPresentation& p);

/// Row-major arrays; entries are strings ("1/2", "t^-1 + 3") or integers.
QMatrix rational_matrix_from_json(const json& j);
Matrix<LaurentPoly> curve_from_json(const json& j);
json matrix_to_json(const QMatrix& m);
json matrix_to_json(const Matrix<LaurentPoly>& m);
json matrix_to_json(const Matrix<Polynomial>& m);

/// {"dim": d, "weights": [...], "terms": [{"coeff": "c", "labels": [[block, [exponents]], ...]}]}
/// Blocks are 1-based; labels may come in any order (the sign of the
/// reordering is applied).
QMultiVector point_from_json(const json& j);
json point_to_json(const QMultiVector& mv);

}  // namespace grit::io
