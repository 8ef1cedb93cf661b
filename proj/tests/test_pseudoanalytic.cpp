#include <doctest.h>

#include <cmath>
#include <complex>

#include "ohmflow/errors.hpp"
#include "ohmflow/formal_powers.hpp"
#include "ohmflow/pseudoanalytic.hpp"
#include "ohmflow/separable.hpp"

using namespace ohmflow;
using doctest::Approx;

namespace {

GeneratingPair exp_pair() { return exponential_sequence(3.0, 1.0).pair_at(0); }

ScalarField weight_field() {
  return ScalarField(
      [](const Point& q) { return std::exp(-3.0 * q.x1 + q.x2); },
      [](const Point& q) {
        const double v = std::exp(-3.0 * q.x1 + q.x2);
        return std::pair<double, double>{-3.0 * v, v};
      });
}

}  // namespace

TEST_CASE("characteristic coefficients of the exponential pair are constant") {
  const GeneratingPair pair = exp_pair();
  for (const Point q : {Point{0.0, 0.0}, Point{0.1, -0.2}}) {
    const CharCoefficients cc = characteristic_coefficients(pair, q);
    CHECK(std::abs(cc.A) < 1e-9);
    CHECK(std::abs(cc.a) < 1e-9);
    CHECK(std::abs(cc.b - Cplx(1.0, -3.0)) < 1e-9);
    CHECK(std::abs(cc.B - Cplx(1.0, 3.0)) < 1e-9);
  }
}

TEST_CASE("characteristic coefficients of the constant pair vanish") {
  const GeneratingPair pair = homogeneous_pair();
  const CharCoefficients cc = characteristic_coefficients(pair, {0.4, -0.6});
  CHECK(std::abs(cc.A) < 1e-12);
  CHECK(std::abs(cc.a) < 1e-12);
  CHECK(std::abs(cc.B) < 1e-12);
  CHECK(std::abs(cc.b) < 1e-12);
}

TEST_CASE("pair denominator flags degenerate pairs") {
  // F conj(G) - conj(F) G = -2i Im(conj(F) G): -2i for the pair (1, i).
  CHECK(pair_denominator(Cplx(1.0, 0.0), Cplx(0.0, 1.0)) == Cplx(0.0, -2.0));
  CHECK_THROWS_AS((void)pair_denominator(Cplx(1.0, 0.0), Cplx(1.0, 0.0)),
                  DegeneratePairError);
}

TEST_CASE("generators have zero Bers derivative") {
  const GeneratingPair pair = exp_pair();
  for (const Point q : {Point{0.0, 0.0}, Point{0.3, 0.4}, Point{-0.5, 0.2}}) {
    CHECK(std::abs(bers_derivative(pair.F, pair, q)) < 1e-8);
    CHECK(std::abs(bers_derivative(pair.G, pair, q)) < 1e-8);
  }
}

TEST_CASE("Bers derivative reduces to twice the classical derivative for p == 1") {
  const GeneratingPair pair = homogeneous_pair();
  const ComplexField w([](const Point& q) {
    const Cplx z = to_zeta(q);
    return z * z;
  });
  // 2 d/dzeta of zeta^2 at zeta = 1, i.e. at (x1, x2) = (0, 1).
  CHECK(std::abs(bers_derivative(w, pair, {0.0, 1.0}) - 4.0) < 1e-8);
}

TEST_CASE("the two Bers derivative forms agree") {
  const GeneratingPair pair = exp_pair();
  const ComplexField w = closed_form_power_field(1, Cplx(0.0, 1.0), 3.0, 1.0);
  for (const Point q : {Point{0.2, 0.1}, Point{-0.3, 0.5}}) {
    const Cplx direct = bers_derivative(w, pair, q);
    const Cplx decomposed = bers_derivative_decomposed(w, pair, q);
    CHECK(std::abs(direct - decomposed) < 1e-6);
  }
}

TEST_CASE("Vekua residual separates solutions from non-solutions") {
  const GeneratingPair pair = exp_pair();
  CHECK(std::abs(vekua_residual(pair.F, pair, {0.7, -0.1})) < 1e-8);
  const ComplexField z1 = closed_form_power_field(1, 1.0, 3.0, 1.0);
  CHECK(std::abs(vekua_residual(z1, pair, {0.3, 0.4})) < 1e-6);

  const GeneratingPair cr = homogeneous_pair();
  const ComplexField anti([](const Point& q) { return std::conj(to_zeta(q)); });
  CHECK(std::abs(vekua_residual(anti, cr, {0.2, 0.2}) - 2.0) < 1e-8);
}

TEST_CASE("adjoint pair closed forms") {
  const AdjointPair adj = adjoint_pair(exp_pair());
  CHECK(std::abs(adj.Fstar({0.0, 0.0}) - Cplx(0.0, -1.0)) < 1e-12);
  CHECK(std::abs(adj.Gstar({0.0, 0.0}) - 1.0) < 1e-12);

  const AdjointPair cr = adjoint_pair(homogeneous_pair());
  for (const Point q : {Point{0.0, 0.0}, Point{0.5, -0.5}}) {
    CHECK(std::abs(cr.Fstar(q) - Cplx(0.0, -1.0)) < 1e-12);
    CHECK(std::abs(cr.Gstar(q) - 1.0) < 1e-12);
  }

  const ScalarField two([](const Point&) { return 2.0; });
  const AdjointPair doubled = adjoint_pair(pair_from_p(two));
  CHECK(std::abs(doubled.Fstar({0.1, 0.1}) - Cplx(0.0, -2.0)) < 1e-12);
  CHECK(std::abs(doubled.Gstar({0.1, 0.1}) - 0.5) < 1e-12);
}

TEST_CASE("decomposition recovers the real coordinates of a combination") {
  const GeneratingPair pair = exp_pair();
  const Point q{0.2, -0.3};
  const Cplx w = 2.0 * pair.F(q) + 3.0 * pair.G(q);
  const Decomposition d = decompose(w, pair.F(q), pair.G(q));
  CHECK(d.phi == Approx(2.0).epsilon(1e-12));
  CHECK(d.psi == Approx(3.0).epsilon(1e-12));
  CHECK(d.cond >= 1.0);
}

TEST_CASE("p-analytic system residuals") {
  const ScalarField one([](const Point&) { return 1.0; });

  SUBCASE("Cauchy-Riemann case") {
    const ScalarField phi([](const Point& q) { return q.x2; });
    const ScalarField psi([](const Point& q) { return q.x1; });
    const auto [r1, r2] = p_analytic_residual(phi, psi, one, {0.3, 0.1});
    CHECK(std::abs(r1) < 1e-10);
    CHECK(std::abs(r2) < 1e-10);
  }

  SUBCASE("coordinates of a closed-form power solve the weighted system") {
    const ScalarField p = weight_field();
    const ComplexField w = closed_form_power_field(1, 1.0, 3.0, 1.0);
    const ScalarField phi([=](const Point& q) { return w(q).real() / p(q); });
    const ScalarField psi([=](const Point& q) { return p(q) * w(q).imag(); });
    const auto [r1, r2] = p_analytic_residual(phi, psi, p, {0.2, -0.1});
    CHECK(std::abs(r1) < 1e-6);
    CHECK(std::abs(r2) < 1e-6);
  }

  SUBCASE("anti-analytic witness") {
    const ScalarField phi([](const Point& q) { return q.x2; });
    const ScalarField psi([](const Point& q) { return -q.x1; });
    const auto [r1, r2] = p_analytic_residual(phi, psi, one, {0.3, 0.1});
    CHECK(std::abs(r1) > 0.5);
    CHECK(std::abs(r2) < 1e-10);
  }
}

TEST_CASE("multiplication identity for real factors") {
  const ComplexField a = constant_field(0.0);
  const ComplexField b = constant_field(Cplx(1.0, -3.0));
  const ComplexField F = to_complex(weight_field());

  SUBCASE("quadratic factor") {
    const ScalarField phi([](const Point& q) { return q.x1 * q.x2; });
    CHECK(std::abs(mult_identity_residual(phi, F, a, b, {0.1, 0.1})) < 1e-6);
  }

  SUBCASE("constant factor gives the residual of F itself") {
    const ScalarField phi([](const Point&) { return 4.2; });
    CHECK(std::abs(mult_identity_residual(phi, F, a, b, {0.2, -0.4})) < 1e-7);
  }

  SUBCASE("classical case") {
    const ComplexField one_field = constant_field(1.0);
    const ComplexField zero = constant_field(0.0);
    const ScalarField phi([](const Point& q) { return q.x2; });
    CHECK(std::abs(mult_identity_residual(phi, one_field, zero, zero, {0.3, 0.3})) < 1e-10);
  }
}

TEST_CASE("pair orientation holds on the working domain") {
  const GeneratingSequence seq = exponential_sequence(3.0, 1.0);
  for (int m : {0, 1}) {
    const GeneratingPair& pair = seq.pair_at(m);
    for (const Point q : {Point{0.0, 0.0}, Point{0.9, 0.1}, Point{-0.7, -0.7}}) {
      CHECK(std::imag(std::conj(pair.F(q)) * pair.G(q)) > 0.0);
    }
  }
}
