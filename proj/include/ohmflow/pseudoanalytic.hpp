#pragma once

#include <utility>

#include "ohmflow/complex_field.hpp"

namespace ohmflow {

// Threshold on |F conj(G) - conj(F) G| below which a pair is degenerate.
inline constexpr double k_pair_degeneracy_eps = 1e-12;

// Generating pair (F, G) with Im(conj(F) G) > 0 on its domain.
struct GeneratingPair {
  ComplexField F;
  ComplexField G;
};

// F conj(G) - conj(F) G = -2i Im(conj(F) G); throws DegeneratePairError when
// its magnitude is below the degeneracy threshold.
Cplx pair_denominator(Cplx F, Cplx G);

// Characteristic coefficients of a generating pair,
//
//   A = -(conj(F) dG - conj(G) dF) / (F conj(G) - conj(F) G),   d = d_zeta
//   a = -(conj(F) dG - conj(G) dF) / (F conj(G) - conj(F) G),   d = d_zeta_bar
//   B =  (F dG - G dF) / (F conj(G) - conj(F) G),               d = d_zeta
//   b =  (F dG - G dF) / (F conj(G) - conj(F) G),               d = d_zeta_bar
//
// point-independent for pairs of constant-coefficient type.
struct CharCoefficients {
  Cplx A, a, B, b;
};

CharCoefficients characteristic_coefficients(const GeneratingPair& pair, const Point& at,
                                             double h = k_default_fd_step);

// Real coefficients of W = phi F + psi G at one point, with the Frobenius
// condition estimate of the 2x2 solve (large values flag near-degeneracy).
struct Decomposition {
  double phi, psi, cond;
};

Decomposition decompose(Cplx W, Cplx F, Cplx G);

// Adjoint pair F* = -2 conj(F) / (F conj(G) - conj(F) G),
//              G* =  2 conj(G) / (F conj(G) - conj(F) G).
struct AdjointPair {
  ComplexField Fstar;
  ComplexField Gstar;
};

AdjointPair adjoint_pair(const GeneratingPair& pair);

// (F,G)-derivative of W. Two equivalent forms are provided:
//
//   bers_derivative:            d_zeta(W) - A W - B conj(W)
//   bers_derivative_decomposed: (d_zeta phi) F + (d_zeta psi) G
//
// equality of the two is a tested identity, not an assumption.
Cplx bers_derivative(const ComplexField& W, const GeneratingPair& pair, const Point& at,
                     double h = k_default_fd_step);
Cplx bers_derivative_decomposed(const ComplexField& W, const GeneratingPair& pair,
                                const Point& at, double h = k_default_fd_step);

// Residual of the Vekua equation d_zeta_bar(W) - a W - b conj(W); vanishes
// exactly when W is (F,G)-pseudoanalytic.
Cplx vekua_residual(const ComplexField& W, const GeneratingPair& pair, const Point& at,
                    double h = k_default_fd_step);

// Residuals of the p-analytic system (Cauchy-Riemann when p == 1):
//
//   first:  d(phi)/dx2 - (1/p^2) d(psi)/dx1
//   second: d(phi)/dx1 + (1/p^2) d(psi)/dx2
//
// W = p phi + (i/p) psi then solves the Vekua equation with a = 0 and
// b = d_zeta_bar(p)/p.
std::pair<double, double> p_analytic_residual(const ScalarField& phi, const ScalarField& psi,
                                              const ScalarField& p, const Point& at,
                                              double h = k_default_fd_step);

// Residual of the multiplication identity
//   (d_zeta_bar - a - b C)(phi F) = (d_zeta_bar phi) F
// for real phi and F solving the Vekua equation with coefficients a, b
// (C denotes conjugation).
Cplx mult_identity_residual(const ScalarField& phi, const ComplexField& F,
                            const ComplexField& a, const ComplexField& b, const Point& at,
                            double h = k_default_fd_step);

// (p, i/p) for a positive weight p; exact partials are propagated.
GeneratingPair pair_from_p(const ScalarField& p);

// (1, i): the Cauchy-Riemann pair.
GeneratingPair homogeneous_pair();

ComplexField constant_field(Cplx value);

}  // namespace ohmflow
