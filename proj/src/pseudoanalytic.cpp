#include "ohmflow/pseudoanalytic.hpp"

#include <cmath>

#include "ohmflow/errors.hpp"

namespace ohmflow {

namespace {

Cplx conj_field_value(const ComplexField& f, const Point& at) { return std::conj(f(at)); }

}  // namespace

Cplx pair_denominator(Cplx F, Cplx G) {
  Cplx den = F * std::conj(G) - std::conj(F) * G;
  if (std::abs(den) < k_pair_degeneracy_eps)
    throw DegeneratePairError("generating pair degenerate: |F conj(G) - conj(F) G| < 1e-12");
  return den;
}

CharCoefficients characteristic_coefficients(const GeneratingPair& pair, const Point& at,
                                             double h) {
  Cplx F = pair.F(at);
  Cplx G = pair.G(at);
  Cplx den = pair_denominator(F, G);
  Cplx Fz = d_zeta(pair.F, at, h), Fzb = d_zeta_bar(pair.F, at, h);
  Cplx Gz = d_zeta(pair.G, at, h), Gzb = d_zeta_bar(pair.G, at, h);
  CharCoefficients c;
  c.A = -(std::conj(F) * Gz - std::conj(G) * Fz) / den;
  c.a = -(std::conj(F) * Gzb - std::conj(G) * Fzb) / den;
  c.B = (F * Gz - G * Fz) / den;
  c.b = (F * Gzb - G * Fzb) / den;
  return c;
}

Decomposition decompose(Cplx W, Cplx F, Cplx G) {
  // [Re F  Re G] [phi]   [Re W]
  // [Im F  Im G] [psi] = [Im W]
  double det = F.real() * G.imag() - F.imag() * G.real();  // Im(conj(F) G)
  if (2.0 * std::abs(det) < k_pair_degeneracy_eps)
    throw DegeneratePairError("generating pair degenerate in decompose");
  double phi = (W.real() * G.imag() - W.imag() * G.real()) / det;
  double psi = (F.real() * W.imag() - F.imag() * W.real()) / det;
  double fro2 = std::norm(F) + std::norm(G);
  // Frobenius condition estimate of the 2x2 matrix: |M|_F |M^-1|_F = |M|_F^2 / |det|.
  double cond = fro2 / std::abs(det);
  return {phi, psi, cond};
}

AdjointPair adjoint_pair(const GeneratingPair& pair) {
  ComplexField F = pair.F, G = pair.G;
  AdjointPair adj;
  adj.Fstar = ComplexField([F, G](const Point& at) {
    return -2.0 * std::conj(F(at)) / pair_denominator(F(at), G(at));
  });
  adj.Gstar = ComplexField([F, G](const Point& at) {
    return 2.0 * std::conj(G(at)) / pair_denominator(F(at), G(at));
  });
  return adj;
}

Cplx bers_derivative(const ComplexField& W, const GeneratingPair& pair, const Point& at,
                     double h) {
  CharCoefficients c = characteristic_coefficients(pair, at, h);
  Cplx w = W(at);
  return d_zeta(W, at, h) - c.A * w - c.B * std::conj(w);
}

Cplx bers_derivative_decomposed(const ComplexField& W, const GeneratingPair& pair,
                                const Point& at, double h) {
  ComplexField F = pair.F, G = pair.G;
  ScalarField phi([W, F, G](const Point& p) { return decompose(W(p), F(p), G(p)).phi; });
  ScalarField psi([W, F, G](const Point& p) { return decompose(W(p), F(p), G(p)).psi; });
  return d_zeta(phi, at, h) * F(at) + d_zeta(psi, at, h) * G(at);
}

Cplx vekua_residual(const ComplexField& W, const GeneratingPair& pair, const Point& at,
                    double h) {
  CharCoefficients c = characteristic_coefficients(pair, at, h);
  Cplx w = W(at);
  return d_zeta_bar(W, at, h) - c.a * w - c.b * std::conj(w);
}

std::pair<double, double> p_analytic_residual(const ScalarField& phi, const ScalarField& psi,
                                              const ScalarField& p, const Point& at, double h) {
  double p2 = p(at) * p(at);
  double first = partial_x2(phi, at, h) - partial_x1(psi, at, h) / p2;
  double second = partial_x1(phi, at, h) + partial_x2(psi, at, h) / p2;
  return {first, second};
}

Cplx mult_identity_residual(const ScalarField& phi, const ComplexField& F,
                            const ComplexField& a, const ComplexField& b, const Point& at,
                            double h) {
  ComplexField phiF;
  if (phi.has_exact_partials() && F.has_exact_partials()) {
    phiF = ComplexField([phi, F](const Point& p) { return phi(p) * F(p); },
                        [phi, F](const Point& p) {
                          auto [p1, p2] = phi.exact_partials(p);
                          auto [F1, F2] = F.exact_partials(p);
                          double s = phi(p);
                          Cplx f = F(p);
                          return std::pair<Cplx, Cplx>{p1 * f + s * F1, p2 * f + s * F2};
                        });
  } else {
    phiF = ComplexField([phi, F](const Point& p) { return phi(p) * F(p); });
  }
  Cplx lhs = d_zeta_bar(phiF, at, h) - a(at) * phiF(at) - b(at) * conj_field_value(phiF, at);
  Cplx rhs = d_zeta_bar(phi, at, h) * F(at);
  return lhs - rhs;
}

GeneratingPair pair_from_p(const ScalarField& p) {
  GeneratingPair pair;
  if (p.has_exact_partials()) {
    pair.F = ComplexField([p](const Point& at) { return Cplx(p(at), 0.0); },
                          [p](const Point& at) {
                            auto [d1, d2] = p.exact_partials(at);
                            return std::pair<Cplx, Cplx>{Cplx(d1, 0.0), Cplx(d2, 0.0)};
                          });
    pair.G = ComplexField(
        [p](const Point& at) { return Cplx(0.0, 1.0 / p(at)); },
        [p](const Point& at) {
          auto [d1, d2] = p.exact_partials(at);
          double v = p(at);
          Cplx i(0.0, 1.0);
          return std::pair<Cplx, Cplx>{-i * d1 / (v * v), -i * d2 / (v * v)};
        });
  } else {
    pair.F = to_complex(p);
    pair.G = ComplexField([p](const Point& at) { return Cplx(0.0, 1.0 / p(at)); });
  }
  return pair;
}

GeneratingPair homogeneous_pair() {
  return {constant_field(Cplx(1.0, 0.0)), constant_field(Cplx(0.0, 1.0))};
}

ComplexField constant_field(Cplx value) {
  return ComplexField([value](const Point&) { return value; },
                      [](const Point&) { return std::pair<Cplx, Cplx>{0.0, 0.0}; });
}

}  // namespace ohmflow
