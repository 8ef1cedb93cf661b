#pragma once

#include <functional>
#include <vector>

#include "ohmflow/complex_field.hpp"
#include "ohmflow/formal_powers.hpp"
#include "ohmflow/point.hpp"
#include "ohmflow/quadrature.hpp"

namespace ohmflow {

struct CurrentVector {
  double j1 = 0.0, j2 = 0.0, j3 = 0.0;
};

// Current density generated by the power of order m and coefficient a for the
// exponential conductivity (sigma1, sigma2) in the plane, sigma3 out of it:
//
//   j = exp(sigma1 x1 + sigma2 x2 + 2 sigma3 x3) * (Re Z, Im Z, 0),
//
// the sqrt(sigma) E1 p^{-1} Re Z / sqrt(sigma) E2 p Im Z composition with the
// amplitudes of E1, E2 folded in. Orders 0..2 use the closed forms; higher
// orders integrate the recursion with tolerance tol.
CurrentVector current_density(int m, Cplx coeff, double sigma1, double sigma2, double sigma3,
                              const Point3& at, double tol = 1e-9);

// Same composition for an arbitrary plane Vekua solution W.
CurrentVector current_from_solution(const ComplexField& W, double sigma1, double sigma2,
                                    double sigma3, const Point3& at);

// sigma_k -> 0 limit: j = (Re(a zeta^m), Im(a zeta^m), 0).
CurrentVector homogeneous_current(int m, Cplx coeff, const Point& at);

// Closed-form electric potentials u with j = -sigma grad u, additive
// constants dropped:
//
//   m=0, a=1: exp(-2 sigma1 x1) / (2 sigma1)
//   m=0, a=i: exp(-2 sigma2 x2) / (2 sigma2)
//   m=1, a=1: (exp(-2 s1 x1) + exp(-2 s2 x2) - exp(-2 s1 x1 - 2 s2 x2)) / (4 s1 s2)
//   m=1, a=i: x1/(2 s1) - x2/(2 s2) + exp(-2 s1 x1)/(4 s1^2) - exp(-2 s2 x2)/(4 s2^2)
//
// extended to complex coefficients by linearity. Requires nonzero sigma1,
// sigma2 (SingularWeightError otherwise); m >= 2 throws
// ClosedFormUnavailableError.
double potential(int m, Cplx coeff, double sigma1, double sigma2, const Point& at);

// sigma_k -> 0 limits of the potentials (j = -grad u):
//   m=0: -x1 / -x2;  m=1: -x1 x2 / (x1^2 - x2^2)/2.
double homogeneous_potential(int m, Cplx coeff, const Point& at);

// max |j + sigma grad u| component at a point, grad u by central differences
// with relative step h.
double gradient_consistency(int m, Cplx coeff, double sigma1, double sigma2, const Point& at,
                            double h = k_default_fd_step);

// div(sigma grad u) evaluated as sigma [Laplacian(u) + 2 sigma1 du/dx1
// + 2 sigma2 du/dx2], the form whose roundoff stays bounded when sigma is
// large while u is exponentially small. Step h is relative per coordinate.
double divergence_residual(int m, Cplx coeff, double sigma1, double sigma2, const Point& at,
                           double h = 1e-4);

struct BoundarySample {
  double theta = 0.0;
  double u = 0.0;    // potential for the exponential conductivity
  double u_h = 0.0;  // homogeneous (sigma -> const) counterpart, unscaled
};

struct BoundaryTrace {
  int m = 0;
  Cplx coeff;
  // Suggested multiplier to co-plot u_h with u on one axis (20 for order 1,
  // where the curves differ by that much). Display metadata only: stored u_h
  // values are never scaled.
  double homogeneous_display_scale = 1.0;
  std::vector<BoundarySample> samples;
};

// Potentials on the unit circle x1 = cos(theta), x2 = sin(theta) at
// n_samples uniform angles in [0, 2 pi).
BoundaryTrace boundary_trace(int m, Cplx coeff, double sigma1, double sigma2, int n_samples);

}  // namespace ohmflow
