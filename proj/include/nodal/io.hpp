#pragma once

#include <map>
#include <string>

#include "nodal/construct.hpp"

namespace nodal {

/// A parsed datum with the line each vertex, arrow and operation came from.
struct DatumFile {
  NodalDatum datum;
  std::map<std::string, std::size_t> vertex_lines;
  std::map<std::string, std::size_t> arrow_lines;
};

/// Line-oriented datum format:
///
///   # comment
///   vertices 1 2 3
///   arrow a : 1 -> 2
///   glue 1 3
///   blow 2
///
/// Ids match [A-Za-z0-9_()]+. Throws SyntaxError (line and column) and
/// SemanticError (unknown or duplicate ids, a vertex used by two
/// operations).
DatumFile parse_datum_file(const std::string& text);
NodalDatum parse_datum(const std::string& text);

/// Canonical text of a datum: one `vertices` line, then arrows, glue pairs
/// and blow-ups in stored order.
std::string serialize_datum(const NodalDatum& d);

enum class OutputFormat { Text, Json, Dot };

/// Renders p with its relations in canonical order. When a vertex map is
/// given, DOT output draws merged vertices as boxes and puts each blown pair
/// in a shared cluster.
std::string emit_presentation(const Presentation& p, OutputFormat format,
                              const GluedVertexMap* vertex_map = nullptr);

/// Reads the JSON written by emit_presentation. Throws InvalidPresentation.
Presentation parse_presentation_json(const std::string& text);

}  // namespace nodal
