#pragma once

#include "funcwalk/walk.hpp"

#include <string_view>

namespace funcwalk {

/// Parses walk notation "<f>_m" or "<f | g>_m". ASCII angle brackets and
/// the U+27E8 / U+27E9 glyphs are both accepted; whitespace is free.
WalkSpec parse_walk_notation(std::string_view text, int start_index = 1);

}  // namespace funcwalk
