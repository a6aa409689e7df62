#pragma once

#include <string>

#include "ptt/types.hpp"

namespace ptt {

/// Parse a real scalar given as a decimal number or an exact expression:
/// `sqrt2`, `pi`, `sqrt3/2`, `pi/3`, `1/sqrt2`, `-sqrt2`, `2pi/5`, plain
/// numbers, and `<a>/<b>` ratios of any of these. Throws
/// std::invalid_argument on anything else.
double parse_real(const std::string& text);

/// Parse a complex amplitude: `<re>`, `<im>i`, or `<re>+<im>i` / `<re>-<im>i`,
/// each part in parse_real syntax (`i` alone means 1i).
Complex parse_complex(const std::string& text);

/// Parse a comma-separated 3-component state, e.g. "1/sqrt2,0,1/sqrt2".
Vec3 parse_state3(const std::string& text);

}  // namespace ptt
