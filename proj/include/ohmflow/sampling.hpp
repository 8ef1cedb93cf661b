#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "ohmflow/point.hpp"

namespace ohmflow {

// Uniform double in [0, 1) built from the top 53 bits of the generator
// output; identical across platforms, unlike the std distributions.
inline double uniform01(std::mt19937_64& gen) {
  return static_cast<double>(gen() >> 11) * 0x1.0p-53;
}

inline double uniform_in(std::mt19937_64& gen, double lo, double hi) {
  return lo + (hi - lo) * uniform01(gen);
}

// Rejection-sampled point with x1^2 + x2^2 < r_max^2.
inline Point random_disk_point(std::mt19937_64& gen, double r_max = 1.0) {
  for (;;) {
    const double x1 = uniform_in(gen, -r_max, r_max);
    const double x2 = uniform_in(gen, -r_max, r_max);
    if (x1 * x1 + x2 * x2 < r_max * r_max) return {x1, x2};
  }
}

inline Point3 random_box_point(std::mt19937_64& gen, double half_width = 1.0) {
  return {uniform_in(gen, -half_width, half_width), uniform_in(gen, -half_width, half_width),
          uniform_in(gen, -half_width, half_width)};
}

// n x n lattice over [-1,1]^2 restricted to the closed unit disk, ordered
// lexicographically with x1 as the outer key.
std::vector<Point> disk_grid(int n);

// n^3 lattice over the closed box [-w, w]^3, x1 outermost.
std::vector<Point3> box_grid(int n, double half_width = 1.0);

}  // namespace ohmflow
