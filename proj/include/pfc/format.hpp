#pragma once

#include <string>

namespace pfc {

/// Shortest decimal string that reads back to exactly x ('.' separator, no locale).
std::string format_double(double x);

/// Fixed-point with `decimals` digits after the point, locale independent.
std::string format_fixed(double x, int decimals);

}  // namespace pfc
