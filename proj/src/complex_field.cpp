#include "ohmflow/complex_field.hpp"

#include <cmath>

#include "ohmflow/errors.hpp"

namespace ohmflow {

namespace {

bool finite(Cplx v) { return std::isfinite(v.real()) && std::isfinite(v.imag()); }

Cplx checked(const ComplexField& f, const Point& at) {
  Cplx v = f(at);
  if (!finite(v)) throw EvaluationError("non-finite field value on derivative stencil");
  return v;
}

double checked(const ScalarField& f, const Point& at) {
  double v = f(at);
  if (!std::isfinite(v)) throw EvaluationError("non-finite field value on derivative stencil");
  return v;
}

template <class Field>
auto central_x1(const Field& f, const Point& at, double h) {
  double s = fd_step(at.x1, h);
  return (checked(f, {at.x1 + s, at.x2}) - checked(f, {at.x1 - s, at.x2})) / (2.0 * s);
}

template <class Field>
auto central_x2(const Field& f, const Point& at, double h) {
  double s = fd_step(at.x2, h);
  return (checked(f, {at.x1, at.x2 + s}) - checked(f, {at.x1, at.x2 - s})) / (2.0 * s);
}

}  // namespace

ComplexField to_complex(const ScalarField& f) {
  if (f.has_exact_partials()) {
    return ComplexField([f](const Point& p) { return Cplx(f(p), 0.0); },
                        [f](const Point& p) {
                          auto [d1, d2] = f.exact_partials(p);
                          return std::pair<Cplx, Cplx>{Cplx(d1, 0.0), Cplx(d2, 0.0)};
                        });
  }
  return ComplexField([f](const Point& p) { return Cplx(f(p), 0.0); });
}

Cplx partial_x1(const ComplexField& f, const Point& at, double h) {
  if (f.has_exact_partials()) return f.exact_partials(at).first;
  return central_x1(f, at, h);
}

Cplx partial_x2(const ComplexField& f, const Point& at, double h) {
  if (f.has_exact_partials()) return f.exact_partials(at).second;
  return central_x2(f, at, h);
}

double partial_x1(const ScalarField& f, const Point& at, double h) {
  if (f.has_exact_partials()) return f.exact_partials(at).first;
  return central_x1(f, at, h);
}

double partial_x2(const ScalarField& f, const Point& at, double h) {
  if (f.has_exact_partials()) return f.exact_partials(at).second;
  return central_x2(f, at, h);
}

Cplx d_zeta(const ComplexField& f, const Point& at, double h) {
  return partial_x2(f, at, h) - Cplx(0, 1) * partial_x1(f, at, h);
}

Cplx d_zeta_bar(const ComplexField& f, const Point& at, double h) {
  return partial_x2(f, at, h) + Cplx(0, 1) * partial_x1(f, at, h);
}

Cplx d_zeta(const ScalarField& f, const Point& at, double h) {
  return Cplx(partial_x2(f, at, h), -partial_x1(f, at, h));
}

Cplx d_zeta_bar(const ScalarField& f, const Point& at, double h) {
  return Cplx(partial_x2(f, at, h), partial_x1(f, at, h));
}

}  // namespace ohmflow
