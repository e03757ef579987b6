#include "fracspec/format.hpp"

#include <array>
#include <charconv>
#include <cmath>

namespace fracspec {

std::string format_double(double value, int significant) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  std::array<char, 64> buf{};
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), value, std::chars_format::general, significant);
  return std::string(buf.data(), res.ptr);
}

double round_significant(double value, int significant) {
  if (!std::isfinite(value)) return value;
  const std::string text = format_double(value, significant);
  double out = 0.0;
  std::from_chars(text.data(), text.data() + text.size(), out);
  return out;
}

}  // namespace fracspec
