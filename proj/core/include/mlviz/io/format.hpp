#pragma once

#include <string>

namespace mlviz::detail {

// "0.000000" style: six decimals, never exponent notation, no negative zero.
std::string fixedNumber(double v);

// fixedNumber with trailing zeros trimmed but at least one decimal kept:
// 1 -> "1.0", 1.25 -> "1.25".
std::string decimalNumber(double v);

// decimalNumber with a trailing ".0" dropped as well: 10 -> "10", 0 -> "0".
std::string compactNumber(double v);

// JSON string literal including the quotes.
std::string jsonString(const std::string& s);

// Escapes &, <, >, " and ' for XML attribute/text content.
std::string xmlEscape(const std::string& s);

}  // namespace mlviz::detail
