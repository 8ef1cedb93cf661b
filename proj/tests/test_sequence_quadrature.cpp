#include <doctest.h>

#include <cmath>
#include <complex>
#include <limits>
#include <numbers>

#include "ohmflow/errors.hpp"
#include "ohmflow/formal_powers.hpp"
#include "ohmflow/quadrature.hpp"
#include "ohmflow/separable.hpp"

using namespace ohmflow;
using doctest::Approx;

TEST_CASE("exponential sequence pair fields") {
  const GeneratingSequence seq = exponential_sequence(3.0, 1.0);
  const Point q{0.2, -0.3};

  const GeneratingPair& even = seq.pair_at(0);
  CHECK(std::abs(even.F(q) - std::exp(-3.0 * q.x1 + q.x2)) < 1e-14);
  CHECK(std::abs(even.G(q) - Cplx(0.0, std::exp(3.0 * q.x1 - q.x2))) < 1e-14);

  const GeneratingPair& odd = seq.pair_at(1);
  CHECK(std::abs(odd.F(q) - std::exp(-3.0 * q.x1 - q.x2)) < 1e-14);
  CHECK(std::abs(odd.G(q) - Cplx(0.0, std::exp(3.0 * q.x1 + q.x2))) < 1e-14);

  CHECK(seq.exponential_sigmas().has_value());
  CHECK(seq.exponential_sigmas()->first == Approx(3.0));
}

TEST_CASE("sequence has period two") {
  const GeneratingSequence seq = exponential_sequence(3.0, 1.0);
  for (const Point q : {Point{0.0, 0.0}, Point{0.5, 0.5}, Point{-0.4, 0.8}}) {
    CHECK(std::abs(seq.pair_at(0).F(q) - seq.pair_at(2).F(q)) < 1e-14);
    CHECK(std::abs(seq.pair_at(0).G(q) - seq.pair_at(2).G(q)) < 1e-14);
    CHECK(std::abs(seq.pair_at(1).F(q) - seq.pair_at(3).F(q)) < 1e-14);
    CHECK(std::abs(seq.pair_at(1).G(q) - seq.pair_at(3).G(q)) < 1e-14);
  }
}

TEST_CASE("consecutive pairs satisfy the successor relations") {
  const GeneratingSequence seq = exponential_sequence(3.0, 1.0);
  for (int m : {0, 1}) {
    const GeneratingPair& cur = seq.pair_at(m);
    const GeneratingPair& next = seq.pair_at(m + 1);
    const GeneratingPair swapped{next.G, next.F};
    for (const Point q : {Point{0.1, 0.2}, Point{-0.6, 0.3}}) {
      const CharCoefficients c0 = characteristic_coefficients(cur, q);
      const CharCoefficients c1 = characteristic_coefficients(next, q);
      const CharCoefficients cs = characteristic_coefficients(swapped, q);
      CHECK(std::abs(c0.a - c1.a) < 1e-9);
      CHECK(std::abs(c0.B + cs.b) < 1e-9);
    }
  }
}

TEST_CASE("homogeneous sequence is the Cauchy-Riemann pair at every level") {
  const GeneratingSequence seq = homogeneous_sequence();
  const Point q{0.3, 0.3};
  for (int m : {0, 1, 2, 5}) {
    CHECK(std::abs(seq.pair_at(m).F(q) - 1.0) < 1e-15);
    CHECK(std::abs(seq.pair_at(m).G(q) - Cplx(0.0, 1.0)) < 1e-15);
  }
  // The constant weight is the zero-exponent member of the exponential family.
  REQUIRE(seq.exponential_sigmas().has_value());
  CHECK(seq.exponential_sigmas()->first == 0.0);
  CHECK(seq.exponential_sigmas()->second == 0.0);
}

TEST_CASE("line quadrature reproduces classical integrals") {
  const QuadratureOptions opts{1e-12, 20};

  SUBCASE("constant integrand") {
    const Path path = Path::segment({0.0, 0.0}, {0.5, 0.5});
    const Cplx got = integrate_path([](const Point&) { return Cplx(1.0, 0.0); }, path, opts);
    CHECK(std::abs(got - to_zeta({0.5, 0.5})) < 1e-12);
  }

  SUBCASE("linear integrand along a polyline") {
    const Path path = Path::polyline({{0.0, 0.0}, {0.7, 0.0}, {0.7, 0.4}});
    const Cplx end = to_zeta({0.7, 0.4});
    const Cplx got = integrate_path([](const Point& q) { return to_zeta(q); }, path, opts);
    CHECK(std::abs(got - 0.5 * end * end) < 1e-12);
  }

  SUBCASE("loop of an anti-analytic integrand measures the enclosed area") {
    const int n = 64;
    const Path loop = Path::circle({0.0, 0.0}, 1.0, n);
    const Cplx got =
        integrate_path([](const Point& q) { return std::conj(to_zeta(q)); }, loop, opts);
    // The contour is the inscribed n-gon, so the area is the polygon's.
    const double polygon_area = 0.5 * n * std::sin(2.0 * std::numbers::pi / n);
    CHECK(std::abs(got - Cplx(0.0, 2.0 * polygon_area)) < 1e-10);
  }

  SUBCASE("non-finite integrand raises EvaluationError") {
    const Path path = Path::segment({0.0, 0.0}, {0.0, 1.0});
    CHECK_THROWS_AS((void)integrate_path(
                        [](const Point& q) {
                          // Infinite on the upper half of the segment, so a
                          // quadrature node is guaranteed to see it.
                          const double inf = std::numeric_limits<double>::infinity();
                          return Cplx(q.x2 > 0.5 ? inf : 1.0, 0.0);
                        },
                        path, opts),
                    EvaluationError);
  }
}

TEST_CASE("circle paths are closed and positively oriented") {
  const Path loop = Path::circle({0.2, -0.1}, 0.5, 32);
  CHECK(loop.is_closed());
  CHECK(loop.vertices.size() == 33);
  const Cplx got = integrate_path([](const Point&) { return Cplx(1.0, 0.0); }, loop, {});
  CHECK(std::abs(got) < 1e-13);
  // Positive orientation: the area integral (1/2i) loop conj(zeta) d zeta > 0.
  const Cplx area2i =
      integrate_path([](const Point& q) { return std::conj(to_zeta(q)); }, loop, {});
  CHECK(area2i.imag() > 0.0);
}

TEST_CASE("pair integral of the constant solution reproduces the classical primitive") {
  const GeneratingPair cr = homogeneous_pair();
  const ComplexField one = constant_field(1.0);
  const Path path = Path::segment({0.0, 0.0}, {0.0, 1.0});  // zeta from 0 to 1
  const Cplx got = fg_integral(one, cr, path);
  CHECK(std::abs(got - 1.0) < 1e-12);
}

TEST_CASE("one recursion step rebuilds the order-1 power from the order-0 successor") {
  const GeneratingSequence seq = exponential_sequence(3.0, 1.0);
  const ComplexField z10 = formal_power_zero(seq, 1, 1.0, {0.0, 0.0});
  for (const Point at : {Point{0.3, -0.2}, Point{0.15, 0.4}}) {
    const Path path = Path::segment({0.0, 0.0}, at);
    const Cplx got = fg_integral(z10, seq.pair_at(0), path, {1e-11, 20});
    const Cplx expect = closed_form_power(1, 1.0, 3.0, 1.0, at);
    CHECK(std::abs(got - expect) < 1e-9);
  }
}

TEST_CASE("zeroth powers match the generating fields") {
  const GeneratingSequence seq = exponential_sequence(3.0, 1.0);
  const Point q{0.25, -0.45};

  const ComplexField unit = formal_power_zero(seq, 0, 1.0, {0.0, 0.0});
  CHECK(std::abs(unit(q) - std::exp(-3.0 * q.x1 + q.x2)) < 1e-13);

  const ComplexField imag = formal_power_zero(seq, 0, Cplx(0.0, 1.0), {0.0, 0.0});
  CHECK(std::abs(imag(q) - Cplx(0.0, std::exp(3.0 * q.x1 - q.x2))) < 1e-13);

  const GeneratingSequence hom = homogeneous_sequence();
  const ComplexField c = formal_power_zero(hom, 0, Cplx(2.0, 3.0), {0.0, 0.0});
  CHECK(std::abs(c(q) - Cplx(2.0, 3.0)) < 1e-14);
}

TEST_CASE("zeroth power attains its coefficient at an off-origin center") {
  const GeneratingSequence seq = exponential_sequence(3.0, 1.0);
  const Point z0{0.2, 0.3};
  const Cplx a0{0.5, -1.5};
  const ComplexField w = formal_power_zero(seq, 0, a0, z0);
  CHECK(std::abs(w(z0) - a0) < 1e-13);
  CHECK(std::abs(vekua_residual(w, seq.pair_at(0), {0.1, -0.1})) < 1e-7);
}
