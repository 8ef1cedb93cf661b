#include "ohmflow/fields_potentials.hpp"

#include <cmath>
#include <numbers>

#include "ohmflow/errors.hpp"
#include "ohmflow/separable.hpp"

namespace ohmflow {

namespace {

double current_amplitude(double sigma1, double sigma2, double sigma3, const Point3& at) {
  return std::exp(sigma1 * at.x1 + sigma2 * at.x2 + 2.0 * sigma3 * at.x3);
}

Cplx power_value(int m, Cplx coeff, double sigma1, double sigma2, const Point& at, double tol) {
  if (m <= 2) return closed_form_power(m, coeff, sigma1, sigma2, at);
  FormalPowerSpec spec;
  spec.m = m;
  spec.a = coeff;
  QuadratureOptions opts;
  opts.tol = tol;
  return formal_power(exponential_sequence(sigma1, sigma2), spec, at, opts);
}

// Potential for a real unit coefficient at the given order.
double potential_unit(int m, double s1, double s2, const Point& at) {
  const double e1 = std::exp(-2.0 * s1 * at.x1);
  const double e2 = std::exp(-2.0 * s2 * at.x2);
  if (m == 0) return e1 / (2.0 * s1);
  return (e1 + e2 - e1 * e2) / (4.0 * s1 * s2);
}

// Potential for a pure imaginary unit coefficient.
double potential_imag(int m, double s1, double s2, const Point& at) {
  const double e1 = std::exp(-2.0 * s1 * at.x1);
  const double e2 = std::exp(-2.0 * s2 * at.x2);
  if (m == 0) return e2 / (2.0 * s2);
  return at.x1 / (2.0 * s1) - at.x2 / (2.0 * s2) + e1 / (4.0 * s1 * s1) - e2 / (4.0 * s2 * s2);
}

}  // namespace

CurrentVector current_density(int m, Cplx coeff, double sigma1, double sigma2, double sigma3,
                              const Point3& at, double tol) {
  const Cplx z = power_value(m, coeff, sigma1, sigma2, plane_of(at), tol);
  const double amp = current_amplitude(sigma1, sigma2, sigma3, at);
  return {amp * z.real(), amp * z.imag(), 0.0};
}

CurrentVector current_from_solution(const ComplexField& W, double sigma1, double sigma2,
                                    double sigma3, const Point3& at) {
  const Cplx z = W(plane_of(at));
  const double amp = current_amplitude(sigma1, sigma2, sigma3, at);
  return {amp * z.real(), amp * z.imag(), 0.0};
}

CurrentVector homogeneous_current(int m, Cplx coeff, const Point& at) {
  Cplx w = coeff;
  const Cplx zeta = to_zeta(at);
  for (int k = 0; k < m; ++k) w *= zeta;
  return {w.real(), w.imag(), 0.0};
}

double potential(int m, Cplx coeff, double sigma1, double sigma2, const Point& at) {
  if (sigma1 == 0.0 || sigma2 == 0.0) {
    throw SingularWeightError("closed-form potentials require nonzero sigma1 and sigma2");
  }
  if (m < 0 || m > 1) {
    throw ClosedFormUnavailableError("closed-form potential available for orders 0 and 1 only");
  }
  double u = 0.0;
  if (coeff.real() != 0.0) u += coeff.real() * potential_unit(m, sigma1, sigma2, at);
  if (coeff.imag() != 0.0) u += coeff.imag() * potential_imag(m, sigma1, sigma2, at);
  return u;
}

double homogeneous_potential(int m, Cplx coeff, const Point& at) {
  if (m < 0 || m > 1) {
    throw ClosedFormUnavailableError("homogeneous potential available for orders 0 and 1 only");
  }
  double u = 0.0;
  if (m == 0) {
    u = coeff.real() * -at.x1 + coeff.imag() * -at.x2;
  } else {
    u = coeff.real() * -(at.x1 * at.x2) + coeff.imag() * 0.5 * (at.x1 * at.x1 - at.x2 * at.x2);
  }
  return u;
}

double gradient_consistency(int m, Cplx coeff, double sigma1, double sigma2, const Point& at,
                            double h) {
  const CurrentVector j = current_density(m, coeff, sigma1, sigma2, 0.0, with_x3(at, 0.0));
  const double h1 = fd_step(at.x1, h), h2 = fd_step(at.x2, h);
  const double du1 = (potential(m, coeff, sigma1, sigma2, {at.x1 + h1, at.x2}) -
                      potential(m, coeff, sigma1, sigma2, {at.x1 - h1, at.x2})) /
                     (2.0 * h1);
  const double du2 = (potential(m, coeff, sigma1, sigma2, {at.x1, at.x2 + h2}) -
                      potential(m, coeff, sigma1, sigma2, {at.x1, at.x2 - h2})) /
                     (2.0 * h2);
  const double sig = std::exp(2.0 * (sigma1 * at.x1 + sigma2 * at.x2));
  const double r1 = j.j1 + sig * du1;
  const double r2 = j.j2 + sig * du2;
  return std::max(std::abs(r1), std::abs(r2));
}

double divergence_residual(int m, Cplx coeff, double sigma1, double sigma2, const Point& at,
                           double h) {
  auto u = [&](double x1, double x2) { return potential(m, coeff, sigma1, sigma2, {x1, x2}); };
  const double h1 = fd_step(at.x1, h), h2 = fd_step(at.x2, h);
  const double u0 = u(at.x1, at.x2);
  const double up1 = u(at.x1 + h1, at.x2), um1 = u(at.x1 - h1, at.x2);
  const double up2 = u(at.x1, at.x2 + h2), um2 = u(at.x1, at.x2 - h2);
  const double du1 = (up1 - um1) / (2.0 * h1);
  const double du2 = (up2 - um2) / (2.0 * h2);
  const double lap = (up1 - 2.0 * u0 + um1) / (h1 * h1) + (up2 - 2.0 * u0 + um2) / (h2 * h2);
  const double sig = std::exp(2.0 * (sigma1 * at.x1 + sigma2 * at.x2));
  return sig * (lap + 2.0 * sigma1 * du1 + 2.0 * sigma2 * du2);
}

BoundaryTrace boundary_trace(int m, Cplx coeff, double sigma1, double sigma2, int n_samples) {
  BoundaryTrace trace;
  trace.m = m;
  trace.coeff = coeff;
  trace.homogeneous_display_scale = (m == 1) ? 20.0 : 1.0;
  trace.samples.reserve(static_cast<std::size_t>(n_samples));
  for (int k = 0; k < n_samples; ++k) {
    const double theta = 2.0 * std::numbers::pi * k / n_samples;
    const Point at{std::cos(theta), std::sin(theta)};
    BoundarySample s;
    s.theta = theta;
    s.u = potential(m, coeff, sigma1, sigma2, at);
    s.u_h = homogeneous_potential(m, coeff, at);
    trace.samples.push_back(s);
  }
  return trace;
}

}  // namespace ohmflow
