#include <doctest.h>

#include <cmath>
#include <complex>

#include "ohmflow/complex_field.hpp"
#include "ohmflow/errors.hpp"

using namespace ohmflow;
using doctest::Approx;

namespace {

const ComplexField zeta_field([](const Point& q) { return to_zeta(q); });
const ComplexField conj_field([](const Point& q) { return std::conj(to_zeta(q)); });

}  // namespace

TEST_CASE("coordinate mapping puts x2 on the real axis") {
  const Point q{0.25, -0.75};
  CHECK(to_zeta(q) == Cplx(-0.75, 0.25));
  const Point back = from_zeta(Cplx(-0.75, 0.25));
  CHECK(back.x1 == Approx(0.25));
  CHECK(back.x2 == Approx(-0.75));
}

TEST_CASE("unhalved operators on the coordinate fields") {
  for (const Point q : {Point{0.0, 0.0}, Point{0.3, -0.4}, Point{-0.9, 0.1}}) {
    CHECK(std::abs(d_zeta_bar(zeta_field, q)) < 1e-9);
    CHECK(std::abs(d_zeta(zeta_field, q) - 2.0) < 1e-9);
    CHECK(std::abs(d_zeta_bar(conj_field, q) - 2.0) < 1e-9);
    CHECK(std::abs(d_zeta(conj_field, q)) < 1e-9);
  }
}

TEST_CASE("exponential weight is an eigenfunction of both operators") {
  const double s1 = 3.0, s2 = 1.0;
  const ComplexField p(
      [=](const Point& q) { return Cplx(std::exp(-s1 * q.x1 + s2 * q.x2), 0.0); });
  const Point origin{0.0, 0.0};
  CHECK(std::abs(d_zeta_bar(p, origin) - Cplx(1.0, -3.0)) < 1e-8);
  const Point q{0.1, -0.2};
  const Cplx ratio = d_zeta_bar(p, q) / p(q);
  CHECK(std::abs(ratio - Cplx(1.0, -3.0)) < 1e-8);
}

TEST_CASE("exact partials agree with central differences and take precedence") {
  const double s1 = 3.0, s2 = 1.0;
  const auto value = [=](const Point& q) {
    return Cplx(std::exp(-s1 * q.x1 + s2 * q.x2), 0.0);
  };
  const ComplexField exact(value, [=](const Point& q) {
    const Cplx v = value(q);
    return std::pair<Cplx, Cplx>{-s1 * v, s2 * v};
  });
  const ComplexField differenced(value);
  CHECK(exact.has_exact_partials());
  CHECK(!differenced.has_exact_partials());
  for (const Point q : {Point{0.0, 0.0}, Point{0.4, 0.3}, Point{-0.2, -0.6}}) {
    CHECK(std::abs(d_zeta(exact, q) - d_zeta(differenced, q)) < 1e-8);
    CHECK(std::abs(d_zeta_bar(exact, q) - d_zeta_bar(differenced, q)) < 1e-8);
  }
}

TEST_CASE("scalar fields expose the same operator interface") {
  const ScalarField f([](const Point& q) { return q.x1 * q.x1 + 2.0 * q.x2; });
  const Point q{0.5, -0.3};
  CHECK(partial_x1(f, q) == Approx(1.0).epsilon(1e-8));
  CHECK(partial_x2(f, q) == Approx(2.0).epsilon(1e-10));
  // d_zeta x2 = 1, d_zeta x1 = -i with the unhalved convention.
  const ScalarField x2_field([](const Point& q2) { return q2.x2; });
  CHECK(std::abs(d_zeta(x2_field, q) - 1.0) < 1e-10);
  const ScalarField x1_field([](const Point& q2) { return q2.x1; });
  CHECK(std::abs(d_zeta(x1_field, q) - Cplx(0.0, -1.0)) < 1e-10);
}

TEST_CASE("finite-difference step is relative for large coordinates") {
  CHECK(fd_step(0.5) == Approx(1e-5));
  CHECK(fd_step(-3.0) == Approx(3e-5));
  CHECK(fd_step(2.0, 1e-4) == Approx(2e-4));
}

TEST_CASE("non-finite stencil values raise EvaluationError") {
  const ComplexField bad([](const Point& q) { return Cplx(1.0 / q.x1, 0.0); });
  CHECK_THROWS_AS((void)d_zeta(bad, Point{0.0, 0.0}), EvaluationError);
}

TEST_CASE("real fields promote to complex fields with exact partials intact") {
  const ScalarField f([](const Point& q) { return q.x1 * q.x2; },
                      [](const Point& q) { return std::pair<double, double>{q.x2, q.x1}; });
  const ComplexField g = to_complex(f);
  CHECK(g.has_exact_partials());
  const Point q{0.3, 0.7};
  CHECK(g(q) == Cplx(0.21, 0.0));
  const auto [d1, d2] = g.exact_partials(q);
  CHECK(d1 == Cplx(0.7, 0.0));
  CHECK(d2 == Cplx(0.3, 0.0));
}
