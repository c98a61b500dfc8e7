#ifndef DISKGEOM_FIGURES_HPP
#define DISKGEOM_FIGURES_HPP

#include <string>
#include <utility>
#include <vector>

#include "report.hpp"

namespace diskgeom::figures {

using Point = Complex<double>;

struct Segment {
  Point from, to;
  std::string style;  // "solid", "dashed" or "dotted"
};

struct Ring {
  Circle<double> circle;
  std::string style;
};

struct Figure {
  int id = 0;
  std::string caption;
  std::vector<std::pair<std::string, Point>> parameters;
  std::vector<std::pair<std::string, Point>> points;
  std::vector<Segment> segments;
  std::vector<Ring> circles;

  const Point& point(const std::string& name) const;
};

/// Ids 1, 2, 3, 5 and 6. Throws std::invalid_argument for any other id.
Figure build(int id);

report::Json to_json(const Figure& fig);

/// Standalone SVG: 100 px per unit, origin at the center, y up.
std::string to_svg(const Figure& fig);

}  // namespace diskgeom::figures

#endif  // DISKGEOM_FIGURES_HPP
