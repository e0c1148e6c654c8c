#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "steenrod/chains.hpp"
#include "steenrod/complexes.hpp"
#include "steenrod/simplicial.hpp"

namespace steenrod {

/// Malformed input. Line and column are 1-based; 0 when unknown.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column);
  [[nodiscard]] std::size_t line() const { return line_; }
  [[nodiscard]] std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// A complex file: a delta-complex, or the core of a simplicial set when the
/// file says "kind": "simplicial". Face references are not checked here;
/// run validate_delta on the result.
struct ParsedComplex {
  DeltaComplex complex;
  bool simplicial = false;
  /// "max_dim" of a simplicial file, or -1.
  int max_dim = -1;
};

ParsedComplex parse_complex(std::string_view text);

/// {"source", "target", "assignment": [{"from", "to"}]}. Unassigned simplices
/// stay unassigned.
DeltaMap parse_delta_map(std::string_view text, const ComplexPtr& source, const ComplexPtr& target);

/// {"source", "target", "maps": {"<degree>": [{"from", "to": [[id, coeff]]}]}}.
ChainMap parse_chain_map(std::string_view text, const ChainComplexPtr& source, const ChainComplexPtr& target);

/// True when the text is a chain-map file rather than a delta-map file.
bool is_chain_map_text(std::string_view text);

std::string complex_to_json(const DeltaComplex& x);
/// The core of S plus a derived "degenerate" listing up to max_dim.
std::string simplicial_to_json(const SimplicialSet& s, int max_dim);
std::string delta_map_to_json(const DeltaMap& f);

/// Whole file contents; throws std::runtime_error when unreadable.
std::string read_file(const std::string& path);

}  // namespace steenrod
