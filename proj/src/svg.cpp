#include "rectcover/svg.hpp"

#include <algorithm>
#include <array>

namespace rectcover {

namespace {

constexpr std::array<const char*, 6> kPalette = {
    "#e41a1c", "#377eb8", "#4daf4a", "#984ea3", "#ff7f00", "#a65628",
};

}  // namespace

std::string serialize_svg(const Polygon& p, const std::vector<Rect>& rects) {
  const Rect box = bounding_box(p);
  const Coord margin = 1;
  // Flip y so that larger y renders higher on screen.
  auto px = [&](Coord x) { return x - box.left(); };
  auto py = [&](Coord y) { return box.top() - y; };

  const Coord vw = box.width() + 2 * margin;
  const Coord vh = box.height() + 2 * margin;
  const Coord width_px = 640;
  const Coord height_px = std::max<Coord>(1, width_px * vh / vw);

  std::string out;
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"-1 -1 " + std::to_string(vw) +
         " " + std::to_string(vh) + "\" width=\"" + std::to_string(width_px) + "\" height=\"" +
         std::to_string(height_px) + "\">\n";

  auto ring_path = [&](const std::vector<Point>& ring) {
    std::string d = "M " + std::to_string(px(ring[0].x)) + " " + std::to_string(py(ring[0].y));
    for (std::size_t i = 1; i < ring.size(); ++i)
      d += " L " + std::to_string(px(ring[i].x)) + " " + std::to_string(py(ring[i].y));
    d += " Z";
    return d;
  };

  std::string d = ring_path(p.outer);
  for (const auto& hole : p.holes) d += " " + ring_path(hole);
  out += "<path d=\"" + d +
         "\" fill=\"#efefef\" fill-rule=\"evenodd\" stroke=\"#222222\" stroke-width=\"0.08\"/>\n";

  for (std::size_t i = 0; i < rects.size(); ++i) {
    const Rect& r = rects[i];
    const char* color = kPalette[i % kPalette.size()];
    out += "<rect x=\"" + std::to_string(px(r.left())) + "\" y=\"" + std::to_string(py(r.top())) +
           "\" width=\"" + std::to_string(r.width()) + "\" height=\"" + std::to_string(r.height()) +
           "\" fill=\"" + color + "\" fill-opacity=\"0.35\" stroke=\"" + color +
           "\" stroke-width=\"0.06\"/>\n";
  }
  out += "</svg>\n";
  return out;
}

}  // namespace rectcover
