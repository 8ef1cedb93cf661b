#pragma once

#include <stdexcept>
#include <string>

namespace ohmflow {

// A field returned a non-finite value inside a stencil or quadrature rule.
class EvaluationError : public std::runtime_error {
 public:
  explicit EvaluationError(const std::string& what) : std::runtime_error(what) {}
};

// |F conj(G) - conj(F) G| fell below the degeneracy threshold.
class DegeneratePairError : public std::runtime_error {
 public:
  explicit DegeneratePairError(const std::string& what) : std::runtime_error(what) {}
};

// Adaptive quadrature hit its depth limit before the error estimate met tol.
class QuadratureError : public std::runtime_error {
 public:
  QuadratureError(const std::string& what, double achieved)
      : std::runtime_error(what), achieved_(achieved) {}
  double achieved_error() const { return achieved_; }

 private:
  double achieved_;
};

// No closed-form expression is implemented for the requested object.
class ClosedFormUnavailableError : public std::runtime_error {
 public:
  explicit ClosedFormUnavailableError(const std::string& what) : std::runtime_error(what) {}
};

// The affine weight x2 + K vanishes inside the fit domain.
class SingularWeightError : public std::runtime_error {
 public:
  explicit SingularWeightError(const std::string& what) : std::runtime_error(what) {}
};

// A point fell outside every band of a piecewise conductivity.
class BandLookupError : public std::runtime_error {
 public:
  explicit BandLookupError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace ohmflow
