#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "rectcover/geometry.hpp"

namespace rectcover {

// Parses a sequence of WKT POLYGON / MULTIPOLYGON geometries (one suffices).
// Coordinates must be integers. Each member polygon is validated and
// canonicalized. Throws ParseError (with byte offset) or ValidationError.
std::vector<Polygon> parse_wkt(std::string_view text);

std::string to_wkt(const Polygon& p);
// One polygon becomes POLYGON, several become a MULTIPOLYGON.
std::string to_wkt(const std::vector<Polygon>& ps);

}  // namespace rectcover
