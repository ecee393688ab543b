#pragma once

#include <string>
#include <string_view>

namespace cmub {

// Shortest decimal that parses back to `x`, capped at 12 significant digits.
// -0 prints as 0.
std::string format_number(double x);

// Radians, optionally as a multiple of pi: "1.2", "pi", "-pi", "0.25pi",
// "2pi/3", "pi/4". Throws std::invalid_argument on anything else.
double parse_angle(std::string_view text);

}  // namespace cmub
