#pragma once

#include "json.hpp"
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "skewjdt/tabloids.hpp"

namespace skewjdt {

// Text tableau format:
//
//   shape: 4,4,4,3/2,2,1
//   . . 0 1
//   . . 1 7
//   . 1 4 9
//   2 9 9
//
// One line per row of the outer partition; "." marks cells of the inner
// partition, "-" an empty cell (partial fillings only). Tokens are separated
// by single spaces on output and by any whitespace on input. Lines starting
// with '#' are comments. A stream holds several documents separated by blank
// lines.

using TableauDocument = std::variant<Tabloid, PartialFilling>;

std::string serialize_tableau(const Tabloid& t);
std::string serialize_tableau(const PartialFilling& p);
std::string serialize_tableau(const TableauDocument& doc);

/// Parses exactly one document. Throws ParseError with line/column.
TableauDocument parse_tableau(std::string_view text);
/// Like parse_tableau but rejects partial fillings.
Tabloid parse_tabloid(std::string_view text);
/// Parses every document in a stream.
std::vector<TableauDocument> parse_documents(std::string_view text);

// Structured form: {"kind": "tabloid"|"partial", "lambda": [...], "mu": [...],
// "rows": [[...], ...]} where rows list only skew cells, null for empty ones.

nlohmann::json to_json(const Tabloid& t);
nlohmann::json to_json(const PartialFilling& p);
TableauDocument tableau_from_json(const nlohmann::json& j);
/// Parses a structured document given as text; errors become ParseError.
TableauDocument parse_structured(std::string_view text);

/// Single-line rendering, rows joined by " / ": ". 0 0 / 0 5".
std::string compact(const Tabloid& t);
std::string compact(const PartialFilling& p);

}  // namespace skewjdt
