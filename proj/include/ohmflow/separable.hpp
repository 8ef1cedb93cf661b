#pragma once

#include <functional>
#include <optional>
#include <utility>

#include "ohmflow/pseudoanalytic.hpp"

namespace ohmflow {

// Strictly positive one-dimensional factor with its logarithmic derivative
// (d/dx) log f; the log-derivative supplies exact partials for the pair
// fields built from the factor.
struct Factor1D {
  std::function<double(double)> value;
  std::function<double(double)> log_derivative;
};

// Separable weight p(x1, x2) = p1(x1) p2(x2) > 0.
struct SeparableP {
  Factor1D p1, p2;
  double value(const Point& at) const { return p1.value(at.x1) * p2.value(at.x2); }
};

// p1 = exp(-sigma1 x1), p2 = exp(sigma2 x2), the weight of the exponential
// conductivity model.
SeparableP exponential_p(double sigma1, double sigma2);
SeparableP constant_p();

// Period-2 generating sequence of a separable weight:
//
//   even m: (p1 p2, i / (p1 p2))
//   odd  m: (p1 / p2, i p2 / p1)
//
// Successive pairs satisfy the successor relations (equal a coefficients,
// B_m = -b of the swapped next pair), which the tests verify.
class GeneratingSequence {
 public:
  explicit GeneratingSequence(SeparableP p);
  GeneratingSequence(SeparableP p, double sigma1, double sigma2);

  const GeneratingPair& pair_at(int m) const { return m % 2 == 0 ? even_ : odd_; }
  const SeparableP& weight() const { return p_; }

  // Set when the sequence comes from the exponential weight; enables the
  // closed-form powers.
  const std::optional<std::pair<double, double>>& exponential_sigmas() const { return sigmas_; }

 private:
  SeparableP p_;
  GeneratingPair even_, odd_;
  std::optional<std::pair<double, double>> sigmas_;
};

GeneratingSequence exponential_sequence(double sigma1, double sigma2);

// p == 1: every pair is (1, i) and the formal powers are the classical ones.
GeneratingSequence homogeneous_sequence();

}  // namespace ohmflow
