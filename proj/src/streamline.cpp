#include "ohmflow/streamline.hpp"

#include <algorithm>
#include <cmath>

namespace ohmflow {

StepRule StepRule::sigma_scaled(double sigma1, double sigma2, double sigma_ref, double base) {
  StepRule rule;
  rule.length = [sigma1, sigma2, sigma_ref, base](const Point& at, const CurrentVector&) {
    const double sig = std::exp(2.0 * (sigma1 * at.x1 + sigma2 * at.x2));
    return base * std::clamp(sigma_ref / sig, 0.01, 10.0);
  };
  return rule;
}

StepRule StepRule::two_tier(double sigma1, double sigma2, double threshold, double frac_high,
                            double frac_low) {
  StepRule rule;
  rule.length = [sigma1, sigma2, threshold, frac_high, frac_low](const Point& at,
                                                                 const CurrentVector& j) {
    const double sig = std::exp(2.0 * (sigma1 * at.x1 + sigma2 * at.x2));
    const double frac = (sig >= threshold) ? frac_high : frac_low;
    return frac * std::hypot(j.j1, j.j2);
  };
  return rule;
}

Streamline trace_streamline(const PlaneCurrent& field, Point start, const StepRule& rule,
                            int max_steps) {
  Streamline line;
  line.vertices.push_back(start);
  Point x = start;
  for (int step = 0; step < max_steps; ++step) {
    const CurrentVector j = field(x);
    const double mag = std::hypot(j.j1, j.j2);
    if (mag < k_stagnation_eps) {
      line.stop = StopReason::stagnation;
      return line;
    }
    const double len = rule.length(x, j);
    x = {x.x1 + len * j.j1 / mag, x.x2 + len * j.j2 / mag};
    line.vertices.push_back(x);
    if (x.x1 * x.x1 + x.x2 * x.x2 > 1.0) {
      line.stop = StopReason::left_domain;
      return line;
    }
  }
  line.stop = StopReason::max_steps;
  return line;
}

PlaneCurrent plane_current(int m, Cplx coeff, double sigma1, double sigma2, double tol) {
  return [m, coeff, sigma1, sigma2, tol](const Point& at) {
    return current_density(m, coeff, sigma1, sigma2, 0.0, with_x3(at, 0.0), tol);
  };
}

}  // namespace ohmflow
