#pragma once

#include <cstdint>
#include <string>

namespace ohmflow {

// Options shared by all CLI commands. A JSON config file mirrors this struct
// field by field; command-line flags override file values.
struct RunConfig {
  // Conductivity model: exponential exponents, or a fitted banded model
  // loaded from fit_path (use_fitted selects).
  bool use_fitted = false;
  double sigma1 = 3.0;
  double sigma2 = 1.0;
  double sigma3 = 0.0;
  std::string fit_path;

  std::string domain = "unit-disk";  // or "box"
  int grid_resolution = 21;
  double quadrature_tol = 1e-9;
  double residual_tol = 1e-6;
  std::uint64_t seed = 1234;

  // Streamline tracing.
  double ring_radius = 0.5;
  int ring_count = 12;
  int max_steps = 20000;
  std::string step_rule = "sigma_scaled";  // or "two_tier"
  int arrow_every = 40;                    // SVG arrowhead spacing, in vertices

  // Throws std::invalid_argument describing the first violated constraint.
  void validate() const;
};

// Parses a JSON config file; unknown keys are rejected to catch typos.
RunConfig load_config(const std::string& path);

// Applies one parsed JSON document on top of base (used for tests).
RunConfig apply_config_json(RunConfig base, const std::string& text);

}  // namespace ohmflow
