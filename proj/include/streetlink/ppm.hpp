#pragma once

// Binary PPM heatmaps of a coverage map's level bands. One pixel per grid
// cell, top row at the far end of the street.

#include "streetlink/coverage.hpp"

#include <string>

namespace streetlink {

void write_map_ppm(const GridMap& map, const std::string& path);

} // namespace streetlink
