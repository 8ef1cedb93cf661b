#pragma once

#include <vector>

#include "ohmflow/quadrature.hpp"
#include "ohmflow/separable.hpp"

namespace ohmflow {

// Z_n^(m)(a, z0; .): coefficient a, center z0, exponent m, sequence offset n.
struct FormalPowerSpec {
  int n = 0;
  int m = 0;
  Cplx a = 1.0;
  Point z0{0.0, 0.0};
};

// (F,G)-integral of W along the path:
//
//   G(end) Re(integral of F* W dzeta) + F(end) Re(integral of G* W dzeta)
//
// with the pair prefactors taken at the path endpoint.
Cplx fg_integral(const ComplexField& W, const GeneratingPair& pair, const Path& path,
                 const QuadratureOptions& opts = {});

// Zeroth power lambda F_n + mu G_n with value a0 at z0 (real lambda, mu from
// the 2x2 solve).
ComplexField formal_power_zero(const GeneratingSequence& seq, int n, Cplx a0, const Point& z0);

// Formal power through the recursion
//
//   Z_n^(m) = m * (F_n,G_n)-integral of Z_{n+1}^(m-1) from z0 to the point,
//
// along the straight segment by default, or an explicit path whose last
// vertex is the evaluation point. Inner recursion levels run at a tightened
// tolerance so the outer error estimate is not chasing integrand noise.
Cplx formal_power(const GeneratingSequence& seq, const FormalPowerSpec& sp, const Point& at,
                  const QuadratureOptions& opts = {});
Cplx formal_power_along(const GeneratingSequence& seq, const FormalPowerSpec& sp,
                        const Path& path, const QuadratureOptions& opts = {});
ComplexField formal_power_field(const GeneratingSequence& seq, const FormalPowerSpec& sp,
                                const QuadratureOptions& opts = {});

// Closed forms of Z^(m)(coeff, 0; .) for the exponential weight, m <= 2
// (ClosedFormUnavailableError beyond). Arbitrary complex coefficients combine
// the 1 and i solutions linearly. The m = 2 forms are evaluated through the
// cancellation-free regrouping
//
//   Z^(2)(1,0)  =  x1^2 e^b H(a) - x2^2 e^{-a} H(-b) + 2i x1 x2 sinhc(a) sinhc(b)
//   Z^(2)(i,0)  = -2 x1 x2 sinhc(a) sinhc(b) + i (x1^2 e^{-b} H(-a) - x2^2 e^{a} H(b))
//
// with a = sigma1 x1, b = sigma2 x2, H = exp_minus_sinhc_over_t, which stays
// accurate down to sigma = 0 where the term-by-term sum cancels
// catastrophically. Normalization: Z^(m)(a,0;zeta) -> a zeta^m as zeta -> 0,
// matching the recursion above.
Cplx closed_form_power(int m, Cplx coeff, double sigma1, double sigma2, const Point& at);
ComplexField closed_form_power_field(int m, Cplx coeff, double sigma1, double sigma2);

struct TaylorSeries {
  Point z0{0.0, 0.0};
  std::vector<Cplx> coefficients;  // a_0 .. a_M
};

struct TaylorDiagnostics {
  std::vector<double> derivative_magnitude;  // |W^[k](z0)|, k = 0..M
  bool noise_flagged = false;                // growth ratio exceeded 1/h at some level
};

// Coefficients of the Taylor series in formal powers. The k-th Bers
// derivative W^[k] is built by nesting bers_derivative through the sequence
// with a step that widens per level (nested stencils amplify noise). With
// the unhalved Wirtinger operators each derivative carries a factor 2
// relative to the classical convention, so
//
//   a_m = W^[m](z0) / (2^m m!)
//
// which reduces to the classical Taylor coefficients for p == 1.
TaylorSeries taylor_coefficients(const ComplexField& W, const GeneratingSequence& seq,
                                 const Point& z0, int order,
                                 TaylorDiagnostics* diag = nullptr);

// Sum of Z^(m)(a_m, z0; at): closed forms when available (exponential weight,
// m <= 2, z0 at the origin), the recursion otherwise.
Cplx taylor_eval(const TaylorSeries& series, const GeneratingSequence& seq, const Point& at,
                 const QuadratureOptions& opts = {});

// |Re(loop integral of G* W dzeta) + i Re(loop integral of F* W dzeta)| over
// a closed path; vanishes exactly when W is (F,G)-integrable.
double path_independence_check(const ComplexField& W, const GeneratingPair& pair,
                               const Path& loop, const QuadratureOptions& opts = {});

}  // namespace ohmflow
