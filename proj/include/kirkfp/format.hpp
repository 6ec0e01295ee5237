#pragma once

#include <string>

namespace kirkfp {

/// Shortest round-trip decimal representation (std::to_chars), so printed
/// values and golden CSV files are byte-stable across runs and platforms.
std::string format_double(double v);

} // namespace kirkfp
