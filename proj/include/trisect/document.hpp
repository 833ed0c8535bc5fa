#pragma once

// Diagram files: UTF-8 JSON, one diagram per file.
//
//   {
//     "model": "torus",
//     "sign": 1,
//     "monodromy": {"type": "twist", "core": [-1, 1], "exponent": 1},
//     "a2": [1, 0],
//     "b2": [0, 1],
//     "c2": [1, 1]
//   }
//
// Genus-2 files use "model": "genus2", carry a1, b1, c1, a2, b2, c2 as
// 4-vectors, and their twist has no core (it is a1 + b1 + c1). Integers are
// JSON integers or decimal strings. Unknown fields are rejected.

#include "trisect/diagram.hpp"

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace trisect {

class DocumentError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct DiagramDocument {
  std::variant<TorusDiagram, Genus2Diagram> diagram;
  std::optional<int> declared_sign;  // genus2 only; torus sign lives in the diagram

  bool is_torus() const { return std::holds_alternative<TorusDiagram>(diagram); }
  const TorusDiagram& torus() const { return std::get<TorusDiagram>(diagram); }
  const Genus2Diagram& genus2() const { return std::get<Genus2Diagram>(diagram); }

  /// validate() of the diagram, plus SignMismatch for genus-2 files.
  std::vector<Issue> issues() const;
  /// Torus model of the document (surgery projection for genus-2 files).
  TorusDiagram surgered() const;
};

/// Throws DocumentError on malformed input.
DiagramDocument parse_document(std::string_view text);
DiagramDocument read_document(const std::filesystem::path& path);

/// Canonical text; parse_document(serialize(d)) == d and the fixtures are
/// byte-identical to their own re-serialization.
std::string serialize(const TorusDiagram& diagram);
std::string serialize(const Genus2Diagram& diagram, std::optional<int> sign = std::nullopt);
std::string serialize(const DiagramDocument& document);

}  // namespace trisect
