#include "ohmflow/special.hpp"

#include <cmath>

namespace ohmflow {

namespace {
constexpr double k_series_switch = 1e-4;
}

double sinhc(double t) {
  if (std::abs(t) < k_series_switch) {
    double t2 = t * t;
    return 1.0 + t2 / 6.0 * (1.0 + t2 / 20.0 * (1.0 + t2 / 42.0));
  }
  return std::sinh(t) / t;
}

double exp_minus_sinhc_over_t(double t) {
  if (std::abs(t) < k_series_switch) {
    return -1.0 + t * (1.0 / 3.0 + t * (-1.0 / 6.0 + t * (1.0 / 30.0 + t * (-1.0 / 120.0 + t / 840.0))));
  }
  return (std::exp(-t) - std::sinh(t) / t) / t;
}

}  // namespace ohmflow
