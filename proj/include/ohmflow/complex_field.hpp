#pragma once

#include <functional>
#include <utility>

#include "ohmflow/point.hpp"

namespace ohmflow {

inline constexpr double k_default_fd_step = 1e-5;

// Actual differencing step for one coordinate: relative for |c| > 1.
inline double fd_step(double coordinate, double h = k_default_fd_step) {
  double a = coordinate < 0 ? -coordinate : coordinate;
  return h * (a > 1.0 ? a : 1.0);
}

// Complex-valued field on the plane, optionally carrying exact partial
// derivatives (d/dx1, d/dx2). The derivative operators below use the exact
// partials when present and central finite differences otherwise.
class ComplexField {
 public:
  using Eval = std::function<Cplx(const Point&)>;
  using Partials = std::function<std::pair<Cplx, Cplx>(const Point&)>;

  ComplexField() = default;
  explicit ComplexField(Eval eval) : eval_(std::move(eval)) {}
  ComplexField(Eval eval, Partials partials)
      : eval_(std::move(eval)), partials_(std::move(partials)) {}

  Cplx operator()(const Point& at) const { return eval_(at); }
  explicit operator bool() const { return static_cast<bool>(eval_); }

  bool has_exact_partials() const { return static_cast<bool>(partials_); }
  std::pair<Cplx, Cplx> exact_partials(const Point& at) const { return partials_(at); }

 private:
  Eval eval_;
  Partials partials_;
};

// Real-valued field on the plane with the same optional-partials contract.
class ScalarField {
 public:
  using Eval = std::function<double(const Point&)>;
  using Partials = std::function<std::pair<double, double>(const Point&)>;

  ScalarField() = default;
  explicit ScalarField(Eval eval) : eval_(std::move(eval)) {}
  ScalarField(Eval eval, Partials partials)
      : eval_(std::move(eval)), partials_(std::move(partials)) {}

  double operator()(const Point& at) const { return eval_(at); }
  explicit operator bool() const { return static_cast<bool>(eval_); }

  bool has_exact_partials() const { return static_cast<bool>(partials_); }
  std::pair<double, double> exact_partials(const Point& at) const { return partials_(at); }

 private:
  Eval eval_;
  Partials partials_;
};

ComplexField to_complex(const ScalarField& f);

Cplx partial_x1(const ComplexField& f, const Point& at, double h = k_default_fd_step);
Cplx partial_x2(const ComplexField& f, const Point& at, double h = k_default_fd_step);
double partial_x1(const ScalarField& f, const Point& at, double h = k_default_fd_step);
double partial_x2(const ScalarField& f, const Point& at, double h = k_default_fd_step);

// Wirtinger-type operators without the conventional 1/2 factor:
//
//   d_zeta     = d/dx2 - i d/dx1      so d_zeta(zeta) = 2,
//   d_zeta_bar = d/dx2 + i d/dx1      so d_zeta_bar(conj(zeta)) = 2,
//
// and d_zeta f = 2 f'(zeta) for holomorphic f. Stencil values must be finite
// (EvaluationError otherwise).
Cplx d_zeta(const ComplexField& f, const Point& at, double h = k_default_fd_step);
Cplx d_zeta_bar(const ComplexField& f, const Point& at, double h = k_default_fd_step);
Cplx d_zeta(const ScalarField& f, const Point& at, double h = k_default_fd_step);
Cplx d_zeta_bar(const ScalarField& f, const Point& at, double h = k_default_fd_step);

}  // namespace ohmflow
