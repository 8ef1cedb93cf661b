#include <doctest.h>

#include <cmath>

#include "ohmflow/formal_powers.hpp"
#include "ohmflow/quaternion.hpp"
#include "ohmflow/quaternion_ohm.hpp"

using namespace ohmflow;
using doctest::Approx;

namespace {

const Quaternion e1 = Quaternion::vector(1.0, 0.0, 0.0);
const Quaternion e2 = Quaternion::vector(0.0, 1.0, 0.0);
const Quaternion e3 = Quaternion::vector(0.0, 0.0, 1.0);

bool near(const Quaternion& a, const Quaternion& b, double tol = 1e-12) {
  return max_abs_component(a - b) < tol;
}

}  // namespace

TEST_CASE("Hamilton multiplication table") {
  CHECK(near(e1 * e2, e3));
  CHECK(near(e2 * e1, -e3));
  CHECK(near(e2 * e3, e1));
  CHECK(near(e3 * e1, e2));
  CHECK(near(e1 * e1, Quaternion::scalar(-1.0)));
  CHECK(near(e2 * e2, Quaternion::scalar(-1.0)));
  CHECK(near(e3 * e3, Quaternion::scalar(-1.0)));
  CHECK(near(e1 * e2 * e3, Quaternion::scalar(-1.0)));
  CHECK(near((Quaternion::scalar(1.0) + e1) * (Quaternion::scalar(1.0) - e1),
             Quaternion::scalar(2.0)));
}

TEST_CASE("norm is multiplicative and conjugation reverses products") {
  const Quaternion a{0.3, -1.2, 0.7, 2.0};
  const Quaternion b{-0.5, 0.4, 1.1, -0.9};
  CHECK(norm(a * b) == Approx(norm(a) * norm(b)).epsilon(1e-13));
  CHECK(near(conj(a * b), conj(b) * conj(a), 1e-13));
}

TEST_CASE("vector-part operator recovers gradient, divergence and curl") {
  SUBCASE("gradient of a scalar part") {
    const QuatField q = [](const Point3& p) { return Quaternion::scalar(p.x1); };
    CHECK(near(mt_operator(q, {0.2, -0.1, 0.4}), e1, 1e-9));
  }

  SUBCASE("divergence of the identity vector field") {
    const QuatField q = [](const Point3& p) { return Quaternion::vector(p.x1, p.x2, p.x3); };
    CHECK(near(mt_operator(q, {0.3, 0.3, -0.2}), Quaternion::scalar(-3.0), 1e-9));
  }

  SUBCASE("curl of a rotation field") {
    const QuatField q = [](const Point3& p) { return Quaternion::vector(-p.x2, p.x1, 0.0); };
    CHECK(near(mt_operator(q, {0.1, 0.5, 0.0}), 2.0 * e3, 1e-9));
  }

  SUBCASE("step-halving extrapolation agrees on smooth fields") {
    const QuatField q = [](const Point3& p) {
      return Quaternion::vector(std::sin(p.x1), std::cos(p.x2), p.x3 * p.x3);
    };
    const Point3 at{0.4, -0.3, 0.2};
    CHECK(near(mt_operator(q, at), mt_operator(q, at, k_default_fd_step3, true), 1e-9));
  }
}

TEST_CASE("conductivity direction vector") {
  CHECK(near(sigma_vector(ExpSigmaModel{3.0, 1.0, 0.0}, {0.7, -0.2, 0.1}),
             3.0 * e1 + e2));
  CHECK(near(sigma_vector(ExpSigmaModel{0.0, 0.0, 0.0}, {0.1, 0.1, 0.1}),
             Quaternion{}));
  CHECK(near(sigma_vector(ExpSigmaModel{1.0, 1.0, 1.0}, {0.5, 0.5, 0.5}),
             e1 + e2 + e3));
}

TEST_CASE("exponential solution set values") {
  const ExpSigmaModel model{3.0, 1.0, 0.0};
  const BersSet set = bers_set(model);
  CHECK(near(set.E1({0.0, 0.0, 0.0}), e1));
  CHECK(near(set.E2({0.1, 0.0, 0.0}), std::exp(0.3) * e2, 1e-13));

  const BersSet flat = bers_set(ExpSigmaModel{0.0, 0.0, 0.0});
  const Point3 q{0.4, -0.6, 0.9};
  CHECK(near(flat.E1(q), e1));
  CHECK(near(flat.E2(q), e2));
  CHECK(near(flat.E3(q), e3));
}

TEST_CASE("generalized Ohm residual") {
  SUBCASE("solution fields have vanishing residual") {
    const ExpSigmaModel model{3.0, 1.0, 0.0};
    const BersSet set = bers_set(model);
    const Point3 at{0.2, -0.1, 0.4};
    CHECK(max_abs_component(ohm_residual(set.E1, model, at)) < 1e-6);
    CHECK(max_abs_component(ohm_residual(set.E2, model, at)) < 1e-6);
    CHECK(max_abs_component(ohm_residual(set.E3, model, at)) < 1e-6);
  }

  SUBCASE("constant field in a homogeneous medium") {
    const ExpSigmaModel flat{0.0, 0.0, 0.0};
    const QuatField q = [](const Point3&) { return e1; };
    CHECK(max_abs_component(ohm_residual(q, flat, {0.3, 0.3, 0.3})) < 1e-10);
  }

  SUBCASE("non-solution witness") {
    const ExpSigmaModel flat{0.0, 0.0, 0.0};
    const QuatField q = [](const Point3& p) { return p.x1 * e1; };
    const Quaternion r = ohm_residual(q, flat, {0.2, 0.2, 0.2});
    CHECK(r.q0 == Approx(-1.0).epsilon(1e-8));
  }
}

TEST_CASE("scalar amplitudes match the set fields") {
  const ExpSigmaModel model{3.0, 1.0, 2.0};
  const BersSet set = bers_set(model);
  const Point3 at{0.3, -0.5, 0.2};
  CHECK(set.E1(at).q1 == Approx(bers_amplitude1(model, at)).epsilon(1e-14));
  CHECK(set.E2(at).q2 == Approx(bers_amplitude2(model, at)).epsilon(1e-14));
}

TEST_CASE("compatibility system ties plane coordinates to the weight") {
  const ExpSigmaModel model{3.0, 1.0, 0.0};

  SUBCASE("coordinates of an order-1 power") {
    const ComplexField w = closed_form_power_field(1, 1.0, 3.0, 1.0);
    const ScalarField3 phi1 = [&](const Point3& p) {
      return w(plane_of(p)).real() / model.p(plane_of(p));
    };
    const ScalarField3 phi2 = [&](const Point3& p) {
      return model.p(plane_of(p)) * w(plane_of(p)).imag();
    };
    for (const double r : compatibility_residual(phi1, phi2, model, {0.2, -0.1, 0.4})) {
      CHECK(std::abs(r) < 1e-6);
    }
  }

  SUBCASE("constants satisfy the system") {
    const ScalarField3 c1 = [](const Point3&) { return 2.0; };
    const ScalarField3 c2 = [](const Point3&) { return -1.0; };
    for (const double r : compatibility_residual(c1, c2, model, {0.1, 0.2, 0.3})) {
      CHECK(std::abs(r) < 1e-10);
    }
  }

  SUBCASE("x3 dependence is a witness") {
    const ScalarField3 phi1 = [](const Point3& p) { return p.x3; };
    const ScalarField3 phi2 = [](const Point3&) { return 0.0; };
    const auto r = compatibility_residual(phi1, phi2, model, {0.1, 0.2, 0.3});
    CHECK(r[2] == Approx(1.0).epsilon(1e-9));
  }
}

TEST_CASE("lifting a plane solution solves the spatial equation") {
  const ExpSigmaModel model{3.0, 1.0, 0.0};
  const ComplexField w = closed_form_power_field(1, Cplx(0.0, 1.0), 3.0, 1.0);
  const ScalarField phi1([&](const Point& q) { return w(q).real() / model.p(q); });
  const ScalarField phi2([&](const Point& q) { return model.p(q) * w(q).imag(); });
  const QuatField lift = lift_plane_solution(phi1, phi2, model);
  for (const Point3 at : {Point3{0.0, 0.0, 0.0}, Point3{0.3, -0.2, 0.5}}) {
    CHECK(max_abs_component(ohm_residual(lift, model, at)) < 1e-5);
  }
}
