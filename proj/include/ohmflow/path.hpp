#pragma once

#include <vector>

#include "ohmflow/point.hpp"

namespace ohmflow {

// Piecewise-linear integration path (at least two vertices). Zero-length
// segments contribute nothing.
struct Path {
  std::vector<Point> vertices;

  static Path segment(const Point& a, const Point& b) { return {{a, b}}; }
  static Path polyline(std::vector<Point> vs) { return {std::move(vs)}; }
  // Closed n-gon inscribed in the circle, positively oriented in the zeta
  // plane; first vertex repeated at the end.
  static Path circle(const Point& center, double radius, int n_vertices);

  const Point& start() const { return vertices.front(); }
  const Point& end() const { return vertices.back(); }
  bool is_closed(double tol = 1e-14) const;
};

}  // namespace ohmflow
