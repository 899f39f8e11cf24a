#pragma once

#include <string>

#include "dispgal/instances.hpp"

namespace dispgal {

// Static vector drawing: polygon outline with holes, rooms/corridors shaded
// when the office structure is known, guards as dots, and the closest guard
// pair highlighted.
std::string render_svg(const Instance& inst, const Solution* sol);
void write_svg(const std::string& path, const Instance& inst, const Solution* sol);

}  // namespace dispgal
