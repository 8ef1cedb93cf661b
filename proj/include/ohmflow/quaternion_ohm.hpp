#pragma once

#include <array>
#include <functional>

#include "ohmflow/complex_field.hpp"
#include "ohmflow/point.hpp"
#include "ohmflow/quaternion.hpp"

namespace ohmflow {

// Absolute step for 3-D stencils.
inline constexpr double k_default_fd_step3 = 1e-5;

using QuatField = std::function<Quaternion(const Point3&)>;
using ScalarField3 = std::function<double(const Point3&)>;

// Exponential conductivity sigma = exp(2 sigma1 x1 + 2 sigma2 x2 + 2 sigma3 x3)
// = s1 s2 s3 with s_k = exp(2 sigma_k x_k). Associated quantities:
//   sqrt(sigma) = exp(sigma1 x1 + sigma2 x2 + sigma3 x3)
//   sigma vector grad(sqrt sigma)/sqrt(sigma) = (sigma1, sigma2, sigma3)
//   plane weight p = exp(-sigma1 x1 + sigma2 x2).
struct ExpSigmaModel {
  double sigma1 = 0.0, sigma2 = 0.0, sigma3 = 0.0;

  double sigma(const Point3& at) const {
    return std::exp(2.0 * (sigma1 * at.x1 + sigma2 * at.x2 + sigma3 * at.x3));
  }
  double sqrt_sigma(const Point3& at) const {
    return std::exp(sigma1 * at.x1 + sigma2 * at.x2 + sigma3 * at.x3);
  }
  double sigma_plane(const Point& at) const { return sigma(with_x3(at, 0.0)); }
  double p(const Point& at) const { return std::exp(-sigma1 * at.x1 + sigma2 * at.x2); }
};

// Moisil-Theodoresco operator D q = sum_k e_k dq/dx_k, i.e.
// grad(q0) - div(qvec) + rot(qvec), by central differences with absolute
// step h; richardson adds one step-halving extrapolation.
Quaternion mt_operator(const QuatField& q, const Point3& at, double h = k_default_fd_step3,
                       bool richardson = false);

// grad(sqrt sigma)/sqrt(sigma) as a purely vectorial quaternion; constant for
// the exponential model.
Quaternion sigma_vector(const ExpSigmaModel& model, const Point3& at);

// The three exponential solutions of D E + E sigmavec = 0:
//
//   E1 = e1 exp(-sigma1 x1 + sigma2 x2 + sigma3 x3)
//   E2 = e2 exp( sigma1 x1 - sigma2 x2 + sigma3 x3)
//   E3 = e3 exp( sigma1 x1 + sigma2 x2 - sigma3 x3)
//
// built with the log-derivative reading s_k' = d(log sqrt(s_k))/dx_k
// = sigma_k, the unique reading under which these fields actually solve the
// equation. (The literal reading s_k' = (1/s_k) ds_k/dx_k = 2 sigma_k does
// not, and is not wired in.)
struct BersSet {
  QuatField E1, E2, E3;
};
BersSet bers_set(const ExpSigmaModel& model);

// Scalar amplitudes of the Bers set fields (E_k = e_k * amplitude_k).
double bers_amplitude1(const ExpSigmaModel& model, const Point3& at);
double bers_amplitude2(const ExpSigmaModel& model, const Point3& at);

// Residual of the quaternionic Ohm equation D E + E sigmavec at a point.
Quaternion ohm_residual(const QuatField& E, const ExpSigmaModel& model, const Point3& at,
                        double h = k_default_fd_step3);

// Residuals of the compatibility system tying two real 3-D fields to the
// plane weight p:
//
//   [0] d(phi1)/dx1 + (1/p^2) d(phi2)/dx2
//   [1] d(phi1)/dx2 - (1/p^2) d(phi2)/dx1
//   [2] d(phi1)/dx3
//   [3] d(phi2)/dx3
//
// all vanish exactly when phi1 E1 + phi2 E2 solves the Ohm equation.
std::array<double, 4> compatibility_residual(const ScalarField3& phi1, const ScalarField3& phi2,
                                             const ExpSigmaModel& model, const Point3& at,
                                             double h = k_default_fd_step3);

// phi1 E1 + phi2 E2 for plane fields (constant in x3). Feeding
// phi1 = Re(W)/p, phi2 = p Im(W) of a Vekua solution W produces an Ohm
// solution; the tests drive the closed-form powers through this lift.
QuatField lift_plane_solution(const ScalarField& phi1, const ScalarField& phi2,
                              const ExpSigmaModel& model);

}  // namespace ohmflow
