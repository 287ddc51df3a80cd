#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "corners/complex.hpp"

namespace corners {

/// Facet file:
///
///     vertices: 4
///     0 1
///     2 3
///
/// one facet per line after the header; blank lines and `#` comments are
/// ignored; the literal line `VOID` denotes the void complex. No facet lines
/// means the complex {∅}.
SimplicialComplex parse_facet_file(std::string_view text);
std::string format_facet_file(const SimplicialComplex& complex);

/// Splits on whitespace and parses non-negative integers; throws
/// MalformedInput naming `context` on anything else.
std::vector<int> parse_int_list(std::string_view line, std::string_view context);

/// Reads a whole file; throws MalformedInput if it cannot be opened.
std::string read_text_file(const std::string& path);

/// Drops a trailing `#` comment and surrounding whitespace.
std::string_view strip_line(std::string_view line);

/// Splits text into lines (without terminators).
std::vector<std::string_view> split_lines(std::string_view text);

}  // namespace corners
