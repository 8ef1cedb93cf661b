#include <doctest.h>

#include <cmath>
#include <complex>

#include "ohmflow/errors.hpp"
#include "ohmflow/formal_powers.hpp"
#include "ohmflow/separable.hpp"

using namespace ohmflow;
using doctest::Approx;

namespace {

const QuadratureOptions quad{1e-9, 20};

GeneratingSequence demo_sequence() { return exponential_sequence(3.0, 1.0); }

}  // namespace

TEST_CASE("order-1 power at a point on the imaginary-free axis") {
  const GeneratingSequence seq = demo_sequence();
  const Cplx got = formal_power(seq, {0, 1, 1.0, {0.0, 0.0}}, {0.0, 0.5}, quad);
  CHECK(std::abs(got - std::sinh(0.5)) < 1e-8);
  CHECK(std::sinh(0.5) == Approx(0.52109530549374736).epsilon(1e-15));
}

TEST_CASE("order-2 numeric power matches the closed form") {
  const GeneratingSequence seq = demo_sequence();
  const Point at{0.3, -0.2};
  const Cplx numeric = formal_power(seq, {0, 2, Cplx(0.0, 1.0), {0.0, 0.0}}, at, quad);
  const Cplx closed = closed_form_power(2, Cplx(0.0, 1.0), 3.0, 1.0, at);
  CHECK(std::abs(numeric - closed) < 1e-7);
}

TEST_CASE("homogeneous powers are the classical monomials") {
  const GeneratingSequence hom = homogeneous_sequence();
  const Point at{0.2, 0.4};
  const Cplx zeta = to_zeta(at);
  const Cplx got = formal_power(hom, {0, 3, 1.0, {0.0, 0.0}}, at, quad);
  CHECK(std::abs(got - zeta * zeta * zeta) < 1e-8);
}

TEST_CASE("closed-form power values") {
  SUBCASE("order 0 normalization at the center") {
    CHECK(std::abs(closed_form_power(0, 1.0, 3.0, 1.0, {0.0, 0.0}) - 1.0) < 1e-15);
    CHECK(std::abs(closed_form_power(0, Cplx(0.0, 1.0), 3.0, 1.0, {0.1, 0.1}) -
                   Cplx(0.0, std::exp(0.2))) < 1e-15);
  }

  SUBCASE("order 1 on the x1 axis") {
    const Cplx got = closed_form_power(1, Cplx(0.0, 1.0), 3.0, 1.0, {0.2, 0.0});
    CHECK(std::abs(got - Cplx(-std::sinh(0.6) / 3.0, 0.0)) < 1e-15);
    CHECK(got.real() == Approx(-0.21221786071608042).epsilon(1e-15));
  }

  SUBCASE("order 2 frozen value") {
    const Cplx got = closed_form_power(2, 1.0, 3.0, 1.0, {0.3, -0.2});
    CHECK(got.real() == Approx(-0.044812310754942806).epsilon(1e-14));
    CHECK(got.imag() == Approx(-0.13778318273043777).epsilon(1e-14));
  }

  SUBCASE("order 2 is smooth across the sigma1 x1 = sigma2 x2 line") {
    const Cplx on_line = closed_form_power(2, 1.0, 3.0, 1.0, {0.1, 0.3});
    CHECK(std::isfinite(on_line.real()));
    CHECK(std::isfinite(on_line.imag()));
    const Cplx near_line = closed_form_power(2, 1.0, 3.0, 1.0, {0.1, 0.3 + 1e-6});
    CHECK(std::abs(on_line - near_line) < 1e-5);
  }

  SUBCASE("degenerate conductivity recovers the monomials") {
    for (int m : {0, 1, 2}) {
      for (const Cplx coeff : {Cplx(1.0, 0.0), Cplx(0.0, 1.0)}) {
        const Point at{0.4, -0.7};
        const Cplx zeta = to_zeta(at);
        Cplx mono = coeff;
        for (int k = 0; k < m; ++k) mono *= zeta;
        CHECK(std::abs(closed_form_power(m, coeff, 1e-12, 1e-12, at) - mono) < 1e-8);
      }
    }
  }

  SUBCASE("no closed form beyond order 2") {
    CHECK_THROWS_AS((void)closed_form_power(3, 1.0, 3.0, 1.0, {0.1, 0.1}),
                    ClosedFormUnavailableError);
  }

  SUBCASE("coefficients combine linearly") {
    const Point at{0.25, 0.15};
    const Cplx combined = closed_form_power(1, Cplx(2.0, -1.0), 3.0, 1.0, at);
    const Cplx parts = 2.0 * closed_form_power(1, 1.0, 3.0, 1.0, at) -
                       closed_form_power(1, Cplx(0.0, 1.0), 3.0, 1.0, at);
    CHECK(std::abs(combined - parts) < 1e-15);
  }
}

TEST_CASE("power fields own their sequence") {
  ComplexField field;
  {
    const GeneratingSequence seq = demo_sequence();
    field = formal_power_field(seq, {0, 1, 1.0, {0.0, 0.0}}, quad);
  }
  CHECK(std::abs(field({0.0, 0.5}) - std::sinh(0.5)) < 1e-8);
}

TEST_CASE("Taylor coefficients in formal powers") {
  const GeneratingSequence seq = demo_sequence();

  SUBCASE("a closed-form power expands to itself") {
    const ComplexField z1 = closed_form_power_field(1, 1.0, 3.0, 1.0);
    const TaylorSeries series = taylor_coefficients(z1, seq, {0.0, 0.0}, 2);
    REQUIRE(series.coefficients.size() == 3);
    CHECK(std::abs(series.coefficients[0]) < 1e-6);
    CHECK(std::abs(series.coefficients[1] - 1.0) < 1e-6);
    CHECK(std::abs(series.coefficients[2]) < 1e-4);
  }

  SUBCASE("a generator has only its value term") {
    const GeneratingPair& pair = seq.pair_at(0);
    const TaylorSeries series = taylor_coefficients(pair.F, seq, {0.0, 0.0}, 1);
    CHECK(std::abs(series.coefficients[0] - pair.F({0.0, 0.0})) < 1e-12);
    CHECK(std::abs(series.coefficients[1]) < 1e-7);
  }

  SUBCASE("classical Taylor coefficients for the constant pair") {
    const GeneratingSequence hom = homogeneous_sequence();
    const ComplexField w([](const Point& q) {
      const Cplx z = to_zeta(q);
      return 2.0 + 3.0 * z * z;
    });
    TaylorDiagnostics diag;
    const TaylorSeries series = taylor_coefficients(w, hom, {0.0, 0.0}, 3, &diag);
    REQUIRE(series.coefficients.size() == 4);
    CHECK(std::abs(series.coefficients[0] - 2.0) < 1e-10);
    CHECK(std::abs(series.coefficients[1]) < 1e-6);
    CHECK(std::abs(series.coefficients[2] - 3.0) < 1e-5);
    CHECK(std::abs(series.coefficients[3]) < 1e-4);
    CHECK(diag.derivative_magnitude.size() == 4);
    CHECK(!diag.noise_flagged);
  }
}

TEST_CASE("Taylor evaluation sums the closed-form powers") {
  const GeneratingSequence seq = demo_sequence();

  SUBCASE("pure order-0 series") {
    TaylorSeries series;
    series.coefficients = {Cplx(1.0, 0.0)};
    const Point at{0.3, -0.4};
    CHECK(std::abs(taylor_eval(series, seq, at, quad) -
                   closed_form_power(0, 1.0, 3.0, 1.0, at)) < 1e-12);
  }

  SUBCASE("pure order-1 series") {
    TaylorSeries series;
    series.coefficients = {Cplx(0.0, 0.0), Cplx(1.0, 0.0)};
    CHECK(std::abs(taylor_eval(series, seq, {0.0, 0.5}, quad) - std::sinh(0.5)) < 1e-12);
  }

  SUBCASE("complex coefficients split linearly") {
    TaylorSeries series;
    series.coefficients = {Cplx(0.0, 0.0), Cplx(1.0, 1.0)};
    const Point at{0.2, 0.3};
    const Cplx expect = closed_form_power(1, 1.0, 3.0, 1.0, at) +
                        closed_form_power(1, Cplx(0.0, 1.0), 3.0, 1.0, at);
    CHECK(std::abs(taylor_eval(series, seq, at, quad) - expect) < 1e-12);
  }
}

TEST_CASE("loop integrability of Bers derivatives") {
  const GeneratingSequence seq = demo_sequence();
  const GeneratingPair& pair = seq.pair_at(0);

  SUBCASE("derivative of a pseudoanalytic function is integrable") {
    const ComplexField w = closed_form_power_field(1, 1.0, 3.0, 1.0);
    const ComplexField derivative(
        [&](const Point& q) { return bers_derivative(w, pair, q); });
    const Path loop = Path::circle({0.1, 0.0}, 0.5, 64);
    CHECK(path_independence_check(derivative, pair, loop, {1e-9, 20}) < 1e-6);
  }

  SUBCASE("zero field") {
    const Path loop = Path::circle({0.0, 0.0}, 0.5, 32);
    CHECK(path_independence_check(constant_field(0.0), pair, loop, quad) < 1e-14);
  }

  SUBCASE("anti-analytic witness fails the loop test") {
    const ComplexField anti([](const Point& q) { return std::conj(to_zeta(q)); });
    const Path loop = Path::circle({0.0, 0.0}, 1.0, 64);
    CHECK(path_independence_check(anti, homogeneous_pair(), loop, quad) > 1.0);
  }
}

TEST_CASE("straight and bent paths give the same power") {
  const GeneratingSequence seq = demo_sequence();
  const Point at{0.5, 0.3};
  const FormalPowerSpec sp{0, 1, 1.0, {0.0, 0.0}};
  const Cplx straight = formal_power(seq, sp, at, quad);
  const Cplx bent =
      formal_power_along(seq, sp, Path::polyline({{0.0, 0.0}, {0.5, 0.0}, at}), quad);
  CHECK(std::abs(straight - bent) < 1e-8);
}
