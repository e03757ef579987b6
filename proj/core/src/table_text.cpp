#include "table_text.hpp"

#include <charconv>
#include <cmath>
#include <istream>
#include <string>

#include "fracspec/error.hpp"

namespace fracspec::detail {
namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split_commas(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = line.find(',', start);
    out.push_back(trim(line.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

}  // namespace

double parse_number(std::string_view text, std::string_view what) {
  text = trim(text);
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  double value = 0.0;
  const auto res = std::from_chars(text.data(), text.data() + text.size(), value);
  if (res.ec != std::errc{} || res.ptr != text.data() + text.size() || !std::isfinite(value)) {
    throw ParseError(std::string(what) + ": not a finite decimal number: '" + std::string(text) + "'");
  }
  return value;
}

int parse_integer(std::string_view text, std::string_view what) {
  text = trim(text);
  int value = 0;
  const auto res = std::from_chars(text.data(), text.data() + text.size(), value);
  if (res.ec != std::errc{} || res.ptr != text.data() + text.size()) {
    throw ParseError(std::string(what) + ": not an integer: '" + std::string(text) + "'");
  }
  return value;
}

TextTable read_table(std::istream& in, std::string_view what) {
  TextTable table;
  std::string raw;
  std::size_t line_no = 0;
  bool have_header = false;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string_view line = trim(raw);
    if (line.empty()) continue;
    if (line.front() == '#') {
      const std::string_view body = trim(line.substr(1));
      const auto colon = body.find(':');
      if (colon != std::string_view::npos) {
        const std::string_view key = trim(body.substr(0, colon));
        if (!key.empty() && key.find(' ') == std::string_view::npos) {
          table.metadata[std::string(key)] = std::string(trim(body.substr(colon + 1)));
        }
      }
      continue;
    }
    const auto fields = split_commas(line);
    if (!have_header) {
      for (auto f : fields) table.header.emplace_back(f);
      have_header = true;
      continue;
    }
    if (fields.size() != table.header.size()) {
      throw ParseError(std::string(what) + ": line " + std::to_string(line_no) + " has " +
                       std::to_string(fields.size()) + " fields, header has " + std::to_string(table.header.size()));
    }
    std::vector<double> row;
    row.reserve(fields.size());
    for (auto f : fields) {
      row.push_back(parse_number(f, std::string(what) + " line " + std::to_string(line_no)));
    }
    table.rows.push_back(std::move(row));
    table.row_lines.push_back(line_no);
  }
  if (!have_header) {
    throw ParseError(std::string(what) + ": missing header line");
  }
  return table;
}

}  // namespace fracspec::detail
