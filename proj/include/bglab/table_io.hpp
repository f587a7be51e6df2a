#pragma once

// Multiplication-table files.
//
//   # comments run to the end of a line; blank lines are ignored
//   3            <- order n
//   0 0 0        <- n rows of n 0-based indices, row i lists i * j
//   0 1 1
//   0 1 2
//   labels: 0 a 1   <- optional, n whitespace-free labels
//
// LF and CRLF line endings are both accepted.

#include <string>
#include <string_view>

#include "bglab/semigroup.hpp"

namespace bglab {

  // Throws ParseError for syntax problems, and the load_table errors for
  // tables that are well-formed text but not a semigroup.
  FiniteSemigroup parse_table_file(std::string_view text);

  // The canonical file for s; parse_table_file inverts it.
  std::string render_table_file(FiniteSemigroup const& s);

  // Reads a whole file; throws Error(malformed_input) if it cannot be opened.
  std::string read_file(std::string const& path);

}  // namespace bglab
