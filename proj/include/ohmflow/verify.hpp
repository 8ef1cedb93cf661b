#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace ohmflow {

struct VerifyOptions {
  double sigma1 = 3.0;
  double sigma2 = 1.0;
  double sigma3 = 0.0;
  double quadrature_tol = 1e-9;
  double residual_tol = 1e-6;
  std::uint64_t seed = 1234;
  int grid_resolution = 21;
};

struct CheckResult {
  std::string name;
  double metric = 0.0;  // worst observed value
  double bound = 0.0;
  bool passed = false;  // metric <= bound and no exception escaped
};

// Runs every module's property suite (randomized parts seeded from
// opts.seed, so the outcome and the printed table are reproducible).
std::vector<CheckResult> run_verification(const VerifyOptions& opts);

bool all_passed(const std::vector<CheckResult>& results);

// Fixed-width pass/fail table; deliberately free of timing or environment
// information so repeated runs emit identical bytes.
std::string format_verification_table(const std::vector<CheckResult>& results);

}  // namespace ohmflow
