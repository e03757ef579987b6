#pragma once

#include <string>

namespace fracspec {

/// Locale-independent shortest-general formatting at the given number of
/// significant digits ('.' decimal separator, exponent form when needed).
std::string format_double(double value, int significant = 15);

/// value rounded to `significant` digits, i.e. the number format_double
/// prints.
double round_significant(double value, int significant = 15);

}  // namespace fracspec
