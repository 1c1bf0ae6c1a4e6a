#pragma once

#include <optional>
#include <string>
#include <vector>

#include "isometry_action.hpp"

namespace webclass {

struct WebPlotSpec {
  WebKind kind = WebKind::Cartesian;
  Rational a{0}, b{0};  // polar center
  Rational c2{1};       // elliptic-hyperbolic, foci at (+-sqrt(c2), 0)
  std::optional<SE2Element> g;  // general position: the web of act(g, canonical)
};

struct WebPlot {
  std::string svg;
  KTParams tensor{};
  std::vector<SingularPoint> markers;
  bool markers_checked = false;  // false when the tensor has no singular points to compare with
  bool markers_match = false;
};

/**
 * Two families of coordinate curves. EH: x = c cosh u cos v, y = c sinh u sin v;
 * polar: circles and rays about the center; parabolic: x = (u^2 - v^2)/2, y = u v;
 * Cartesian: grid lines.
 */
WebPlot plot_web(const WebPlotSpec& spec);

}  // namespace webclass
