#pragma once

#include <functional>
#include <vector>

#include "ohmflow/fields_potentials.hpp"
#include "ohmflow/point.hpp"

namespace ohmflow {

// |j| below this is treated as a stagnation point.
inline constexpr double k_stagnation_eps = 1e-12;

enum class StopReason { left_domain, stagnation, max_steps };

struct Streamline {
  std::vector<Point> vertices;
  StopReason stop = StopReason::max_steps;
};

using PlaneCurrent = std::function<CurrentVector(const Point&)>;

// Step-length policy for the explicit tracer. Both built-in rules shrink
// steps where the conductivity (and with it the current) is large.
struct StepRule {
  std::function<double(const Point&, const CurrentVector&)> length;

  // len = base * clamp(sigma_ref / sigma(x), 0.01, 10), spanning step
  // lengths 1e-4 .. 0.1 around the reference conductivity.
  static StepRule sigma_scaled(double sigma1, double sigma2, double sigma_ref,
                               double base = 0.01);
  // len = frac * |j| with frac = frac_high where sigma(x) >= threshold,
  // frac_low elsewhere.
  static StepRule two_tier(double sigma1, double sigma2, double threshold,
                           double frac_high = 1e-4, double frac_low = 0.1);
};

// Euler tracing x <- x + len * j/|j| from start. Stops on stagnation, on
// leaving the unit disk (the first outside point is recorded), or after
// max_steps.
Streamline trace_streamline(const PlaneCurrent& field, Point start, const StepRule& rule,
                            int max_steps = 20000);

// Plane current evaluator for the power of order m with the exponential
// conductivity (x3 fixed to 0).
PlaneCurrent plane_current(int m, Cplx coeff, double sigma1, double sigma2, double tol = 1e-9);

}  // namespace ohmflow
