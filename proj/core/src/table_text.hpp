#pragma once

// Shared reader for the comma-separated table files (spectra and paths).

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "fracspec/spectrum.hpp"

namespace fracspec::detail {

struct TextTable {
  Metadata metadata;
  std::vector<std::string> header;
  std::vector<std::vector<double>> rows;
  std::vector<std::size_t> row_lines;  ///< 1-based source line of each row
};

/// Parses '#' metadata/comments, one header line and numeric rows with the
/// header's column count. Numbers use '.' regardless of locale.
TextTable read_table(std::istream& in, std::string_view what);

double parse_number(std::string_view text, std::string_view what);
int parse_integer(std::string_view text, std::string_view what);

}  // namespace fracspec::detail
