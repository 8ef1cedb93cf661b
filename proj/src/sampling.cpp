#include "ohmflow/sampling.hpp"

namespace ohmflow {

std::vector<Point> disk_grid(int n) {
  std::vector<Point> points;
  for (int i = 0; i < n; ++i) {
    const double x1 = n == 1 ? 0.0 : -1.0 + 2.0 * i / (n - 1);
    for (int k = 0; k < n; ++k) {
      const double x2 = n == 1 ? 0.0 : -1.0 + 2.0 * k / (n - 1);
      if (x1 * x1 + x2 * x2 <= 1.0 + 1e-12) points.push_back({x1, x2});
    }
  }
  return points;
}

std::vector<Point3> box_grid(int n, double half_width) {
  std::vector<Point3> points;
  points.reserve(static_cast<std::size_t>(n) * n * n);
  auto coord = [n, half_width](int i) {
    return n == 1 ? 0.0 : -half_width + 2.0 * half_width * i / (n - 1);
  };
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k)
      for (int l = 0; l < n; ++l) points.push_back({coord(i), coord(k), coord(l)});
  return points;
}

}  // namespace ohmflow
