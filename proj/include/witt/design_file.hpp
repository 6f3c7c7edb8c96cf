#pragma once

// The design file: the 13 point coordinates, U, the blocks in lexicographic
// order and one class witness per block.
//
// The structured form is JSON with a fixed layout (one point or block per
// line) so that emission is byte-reproducible. The table form carries the
// same content for reading.

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "witt/witt_design.hpp"

namespace witt {

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct DesignFile {
  int u = kDefaultU;
  /// Blocks as written; not required to be valid blocks (verification decides).
  std::vector<std::vector<int>> blocks;
  /// Empty, or one witness per block.
  std::vector<BlockClass> classes;

  static DesignFile from_model(const WittModel& m);
  friend bool operator==(const DesignFile&, const DesignFile&) = default;
};

std::string to_structured(const DesignFile& f);
std::string to_table(const DesignFile& f);

/// Throws ParseError on malformed JSON, a missing field, point coordinates
/// that differ from the canonical list, or out-of-range indices.
DesignFile parse_structured(std::string_view text);

}  // namespace witt
