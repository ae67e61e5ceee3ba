#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include "json.hpp"

#include "entex/graph_families.hpp"
#include "entex/seed_system.hpp"

namespace entex {

/// Malformed input text or document; carries a 1-based position when known.
class parse_error : public std::runtime_error {
 public:
  parse_error(const std::string& what, int line = 0, int column = 0);
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

using Json = nlohmann::json;

/// Parses JSON text; syntax errors become parse_error with line and column.
Json parse_json(const std::string& text, const std::string& source = "<input>");
Json read_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

/// Hypergraph document: the graph plus an optional visibility family.
struct HypergraphDoc {
  WeightedHypergraph hypergraph;
  std::optional<std::vector<VertexSet>> visibility;
  bool operator==(const HypergraphDoc&) const = default;
};

Json to_json(const SeedSystem& s);
SeedSystem seed_system_from_json(const Json& j);

Json to_json(const HypergraphDoc& h);
HypergraphDoc hypergraph_from_json(const Json& j);

Json to_json(const GraphRegion& r);
GraphRegion region_from_json(const Json& j);

}  // namespace entex
