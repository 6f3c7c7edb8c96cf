#pragma once

// Text syntax for points, lines and forms used on the command line.
//
//   point: "#k" (k = 0..12) or "x0:x1:x2" (integers, reduced mod 3)
//   line:  "#k" (k = 0..12) or "d0:d1:d2", the dual coordinates
//   form:  "a00,a01,a02,a11,a12,a22"
//
// All parsers throw std::invalid_argument on malformed input.

#include <string>
#include <string_view>

#include "witt/plane.hpp"
#include "witt/quadrics.hpp"

namespace witt {

int parse_point(std::string_view text);
int parse_line(std::string_view text);
QuadraticForm parse_form(std::string_view text);

/// "x0:x1:x2" of the canonical representative.
std::string format_point(int point);
/// "[d0:d1:d2]" of the canonical dual vector.
std::string format_line(int line);

}  // namespace witt
