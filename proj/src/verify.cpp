#include "ohmflow/verify.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <limits>
#include <numbers>
#include <sstream>

#include "ohmflow/conductivity_fit.hpp"
#include "ohmflow/emit.hpp"
#include "ohmflow/errors.hpp"
#include "ohmflow/fields_potentials.hpp"
#include "ohmflow/formal_powers.hpp"
#include "ohmflow/pseudoanalytic.hpp"
#include "ohmflow/quaternion_ohm.hpp"
#include "ohmflow/sampling.hpp"
#include "ohmflow/separable.hpp"
#include "ohmflow/streamline.hpp"

namespace ohmflow {

namespace {

using std::abs;

ScalarField weight_field(const SeparableP& w) {
  return ScalarField([w](const Point& q) { return w.value(q); },
                     [w](const Point& q) {
                       const double v = w.value(q);
                       return std::pair<double, double>{w.p1.log_derivative(q.x1) * v,
                                                        w.p2.log_derivative(q.x2) * v};
                     });
}

ComplexField eval_only(const ComplexField& f) {
  return ComplexField([f](const Point& q) { return f(q); });
}

GeneratingPair eval_only(const GeneratingPair& pair) {
  return {eval_only(pair.F), eval_only(pair.G)};
}

// Deterministic low-degree polynomial in (x1, x2) with coefficients in
// [-1, 1].
ScalarField random_quadratic(std::mt19937_64& gen) {
  std::array<double, 6> c{};
  for (double& v : c) v = uniform_in(gen, -1.0, 1.0);
  return ScalarField([c](const Point& q) {
    return c[0] + c[1] * q.x1 + c[2] * q.x2 + c[3] * q.x1 * q.x2 + c[4] * q.x1 * q.x1 +
           c[5] * q.x2 * q.x2;
  });
}

Cplx classical_power(Cplx coeff, int m, const Point& at) {
  Cplx w = coeff;
  const Cplx zeta = to_zeta(at);
  for (int k = 0; k < m; ++k) w *= zeta;
  return w;
}

// Sample away from the origin (where the relative-error denominator of an
// order-m power collapses) and away from the rim (quadrature strain).
Point random_annulus_point(std::mt19937_64& gen) {
  const double r = uniform_in(gen, 0.1, 0.95);
  const double theta = uniform_in(gen, 0.0, 2.0 * std::numbers::pi);
  return {r * std::sin(theta), r * std::cos(theta)};
}

struct Suite {
  explicit Suite(const VerifyOptions& o) : opts(o) {}

  const VerifyOptions& opts;
  std::vector<CheckResult> results;

  void run(const std::string& name, double bound, const std::function<double()>& metric_fn) {
    CheckResult r;
    r.name = name;
    r.bound = bound;
    try {
      r.metric = metric_fn();
      r.passed = std::isfinite(r.metric) && r.metric <= bound;
    } catch (const std::exception&) {
      r.metric = std::numeric_limits<double>::infinity();
      r.passed = false;
    }
    results.push_back(std::move(r));
  }
};

}  // namespace

std::vector<CheckResult> run_verification(const VerifyOptions& opts) {
  Suite suite(opts);
  const double s1 = opts.sigma1, s2 = opts.sigma2;
  const GeneratingSequence seq = exponential_sequence(s1, s2);
  const GeneratingSequence hom = homogeneous_sequence();
  const QuadratureOptions quad{opts.quadrature_tol, 20};
  const double res_tol = opts.residual_tol;

  // --- complex-plane primitives ---------------------------------------

  suite.run("wirtinger-operator-values", 1e-8, [&] {
    std::mt19937_64 gen(opts.seed + 1);
    const ComplexField zeta_field([](const Point& q) { return to_zeta(q); });
    const ComplexField conj_field([](const Point& q) { return std::conj(to_zeta(q)); });
    const ComplexField p_field(
        [s1, s2](const Point& q) { return Cplx(std::exp(-s1 * q.x1 + s2 * q.x2), 0.0); });
    double worst = 0.0;
    for (int k = 0; k < 10; ++k) {
      const Point at = random_disk_point(gen);
      worst = std::max(worst, abs(d_zeta_bar(zeta_field, at)));
      worst = std::max(worst, abs(d_zeta_bar(conj_field, at) - 2.0));
      worst = std::max(worst, abs(d_zeta_bar(p_field, at) / p_field(at) - Cplx(s2, -s1)));
    }
    return worst;
  });

  suite.run("characteristic-coefficients-weight-pair", 1e-8, [&] {
    std::mt19937_64 gen(opts.seed + 2);
    double worst = 0.0;
    const std::array<std::pair<double, double>, 3> models{
        {{s1, s2}, {0.7, -1.3}, {-2.0, 0.4}}};
    for (const auto& [m1, m2] : models) {
      const GeneratingSequence ms = exponential_sequence(m1, m2);
      const GeneratingPair exact = ms.pair_at(0);
      const GeneratingPair differenced = eval_only(exact);
      for (int k = 0; k < 10; ++k) {
        const Point at = random_disk_point(gen);
        for (const GeneratingPair* pair : {&exact, &differenced}) {
          const CharCoefficients cc = characteristic_coefficients(*pair, at);
          worst = std::max({worst, abs(cc.A), abs(cc.a), abs(cc.B - Cplx(m2, m1)),
                            abs(cc.b - Cplx(m2, -m1))});
        }
      }
    }
    return worst;
  });

  suite.run("generators-have-zero-vekua-residual", 1e-8, [&] {
    std::mt19937_64 gen(opts.seed + 3);
    double worst = 0.0;
    for (int m : {0, 1}) {
      const GeneratingPair& pair = seq.pair_at(m);
      for (int k = 0; k < 10; ++k) {
        const Point at = random_disk_point(gen);
        worst = std::max(worst, abs(vekua_residual(pair.F, pair, at)));
        worst = std::max(worst, abs(vekua_residual(pair.G, pair, at)));
      }
    }
    return worst;
  });

  suite.run("wirtinger-operators-commute", 1e-4, [&] {
    std::mt19937_64 gen(opts.seed + 4);
    const ComplexField f([](const Point& q) {
      return Cplx(std::exp(0.4 * q.x2 - 0.3 * q.x1) * std::cos(q.x1 + 0.5 * q.x2),
                  std::sin(0.8 * q.x1 * q.x2) + 0.2 * q.x1 * q.x1);
    });
    const double outer_h = 1e-3;
    const ComplexField zb([f](const Point& q) { return d_zeta_bar(f, q); });
    const ComplexField z([f](const Point& q) { return d_zeta(f, q); });
    double worst = 0.0;
    for (int k = 0; k < 8; ++k) {
      const Point at = random_disk_point(gen, 0.8);
      worst = std::max(worst, abs(d_zeta(zb, at, outer_h) - d_zeta_bar(z, at, outer_h)));
    }
    return worst;
  });

  suite.run("successor-relation", 1e-9, [&] {
    std::mt19937_64 gen(opts.seed + 5);
    double worst = 0.0;
    for (int m : {0, 1}) {
      const GeneratingPair& pair_m = seq.pair_at(m);
      const GeneratingPair& pair_next = seq.pair_at(m + 1);
      const GeneratingPair swapped{pair_next.G, pair_next.F};
      for (int k = 0; k < 100; ++k) {
        const Point at = random_disk_point(gen);
        const CharCoefficients cm = characteristic_coefficients(pair_m, at);
        const CharCoefficients cn = characteristic_coefficients(pair_next, at);
        const CharCoefficients cs = characteristic_coefficients(swapped, at);
        worst = std::max({worst, abs(cm.a), abs(cn.a), abs(cm.B + cs.b)});
      }
    }
    return worst;
  });

  suite.run("sequence-period-two", 1e-14, [&] {
    std::mt19937_64 gen(opts.seed + 6);
    double worst = 0.0;
    for (int m : {0, 1}) {
      const GeneratingPair& a = seq.pair_at(m);
      const GeneratingPair& b = seq.pair_at(m + 2);
      for (int k = 0; k < 100; ++k) {
        const Point at = random_disk_point(gen);
        worst = std::max({worst, abs(a.F(at) - b.F(at)), abs(a.G(at) - b.G(at))});
      }
    }
    return worst;
  });

  suite.run("multiplication-identity", 1e-6, [&] {
    std::mt19937_64 gen(opts.seed + 7);
    const ComplexField F = to_complex(weight_field(seq.weight()));
    const ComplexField a = constant_field(0.0);
    const ComplexField b = constant_field(Cplx(s2, -s1));
    double worst = 0.0;
    for (int trial = 0; trial < 5; ++trial) {
      const ScalarField phi = random_quadratic(gen);
      for (int k = 0; k < 5; ++k) {
        const Point at = random_disk_point(gen);
        worst = std::max(worst, abs(mult_identity_residual(phi, F, a, b, at)));
      }
    }
    return worst;
  });

  suite.run("p-analytic-system", 1e-6, [&] {
    std::mt19937_64 gen(opts.seed + 8);
    const ScalarField p = weight_field(seq.weight());
    const ComplexField W = closed_form_power_field(1, 1.0, s1, s2);
    const ScalarField phi([W, p](const Point& q) { return W(q).real() / p(q); });
    const ScalarField psi([W, p](const Point& q) { return p(q) * W(q).imag(); });
    double worst = 0.0;
    for (int k = 0; k < 10; ++k) {
      const Point at = random_disk_point(gen);
      const auto [r1, r2] = p_analytic_residual(phi, psi, p, at);
      worst = std::max({worst, abs(r1), abs(r2)});
    }
    return worst;
  });

  // --- formal powers ----------------------------------------------------

  suite.run("closed-powers-vekua-residual", res_tol, [&] {
    const GeneratingPair& pair = seq.pair_at(0);
    double worst = 0.0;
    for (const Point& at : disk_grid(41)) {
      for (int m : {0, 1, 2}) {
        for (const Cplx coeff : {Cplx(1.0, 0.0), Cplx(0.0, 1.0)}) {
          const ComplexField W = closed_form_power_field(m, coeff, s1, s2);
          worst = std::max(worst, abs(vekua_residual(W, pair, at)));
        }
      }
    }
    return worst;
  });

  suite.run("formal-power-order-1-oracle", 1e-6, [&] {
    std::mt19937_64 gen(opts.seed + 9);
    double worst = 0.0;
    for (int k = 0; k < 50; ++k) {
      const Point at = random_annulus_point(gen);
      for (const Cplx coeff : {Cplx(1.0, 0.0), Cplx(0.0, 1.0)}) {
        const Cplx numeric = formal_power(seq, {0, 1, coeff, {0.0, 0.0}}, at, quad);
        const Cplx closed = closed_form_power(1, coeff, s1, s2, at);
        worst = std::max(worst, abs(numeric - closed) / std::max(abs(closed), 1e-12));
      }
    }
    return worst;
  });

  suite.run("formal-power-order-2-oracle", 1e-5, [&] {
    std::mt19937_64 gen(opts.seed + 10);
    double worst = 0.0;
    for (int k = 0; k < 50; ++k) {
      const Point at = random_annulus_point(gen);
      for (const Cplx coeff : {Cplx(1.0, 0.0), Cplx(0.0, 1.0)}) {
        const Cplx numeric = formal_power(seq, {0, 2, coeff, {0.0, 0.0}}, at, quad);
        const Cplx closed = closed_form_power(2, coeff, s1, s2, at);
        worst = std::max(worst, abs(numeric - closed) / std::max(abs(closed), 1e-12));
      }
    }
    return worst;
  });

  suite.run("power-asymptotics-at-origin", 100.0, [&] {
    double worst = 0.0;
    for (int ray = 0; ray < 8; ++ray) {
      const double theta = 2.0 * std::numbers::pi * ray / 8 + std::numbers::pi / 16;
      for (const double r : {1e-1, 1e-2, 1e-3, 1e-4}) {
        const Point at{r * std::cos(theta), r * std::sin(theta)};
        for (int m : {0, 1, 2}) {
          for (const Cplx coeff : {Cplx(1.0, 0.0), Cplx(0.0, 1.0)}) {
            const Cplx closed = closed_form_power(m, coeff, s1, s2, at);
            const double ratio =
                abs(closed - classical_power(coeff, m, at)) / std::pow(r, m + 1);
            worst = std::max(worst, ratio);
          }
        }
      }
    }
    return worst;
  });

  suite.run("degenerate-sigma-powers", 1e-8, [&] {
    std::mt19937_64 gen(opts.seed + 11);
    double worst = 0.0;
    for (int k = 0; k < 20; ++k) {
      const Point at = random_disk_point(gen);
      for (int m : {0, 1, 2}) {
        for (const Cplx coeff : {Cplx(1.0, 0.0), Cplx(0.0, 1.0)}) {
          const Cplx closed = closed_form_power(m, coeff, 1e-12, 1e-12, at);
          worst = std::max(worst, abs(closed - classical_power(coeff, m, at)));
        }
      }
    }
    return worst;
  });

  suite.run("formal-power-path-independence", 10.0 * opts.quadrature_tol, [&] {
    double worst = 0.0;
    for (const Point at : {Point{0.5, 0.3}, Point{-0.4, 0.6}, Point{0.2, -0.7}}) {
      for (int m : {1, 2}) {
        const FormalPowerSpec sp{0, m, 1.0, {0.0, 0.0}};
        const Cplx straight = formal_power(seq, sp, at, quad);
        const Path dogleg = Path::polyline({{0.0, 0.0}, {at.x1, 0.0}, at});
        const Cplx bent = formal_power_along(seq, sp, dogleg, quad);
        worst = std::max(worst, abs(straight - bent));
      }
    }
    return worst;
  });

  suite.run("loop-integrability-of-derivatives", 1e-6, [&] {
    std::mt19937_64 gen(opts.seed + 12);
    const GeneratingPair& pair = seq.pair_at(0);
    const ComplexField W = closed_form_power_field(1, 1.0, s1, s2);
    const ComplexField derivative(
        [W, pair](const Point& q) { return bers_derivative(W, pair, q); });
    double worst = 0.0;
    for (int k = 0; k < 5; ++k) {
      const Point center = random_disk_point(gen, 0.4);
      const double radius = uniform_in(gen, 0.1, 0.5);
      const Path loop = Path::circle(center, radius, 64);
      worst = std::max(worst, path_independence_check(derivative, pair, loop, quad));
    }
    return worst;
  });

  suite.run("taylor-coefficients-classical", 1e-4, [&] {
    const ComplexField W([](const Point& q) {
      const Cplx zeta = to_zeta(q);
      return 2.0 + 3.0 * zeta * zeta;
    });
    const TaylorSeries series = taylor_coefficients(W, hom, {0.0, 0.0}, 3);
    const std::array<Cplx, 4> expect{2.0, 0.0, 3.0, 0.0};
    double worst = 0.0;
    for (std::size_t k = 0; k < expect.size(); ++k) {
      worst = std::max(worst, abs(series.coefficients[k] - expect[k]));
    }
    return worst;
  });

  suite.run("taylor-coefficients-own-power", 1e-4, [&] {
    const ComplexField Z1 = closed_form_power_field(1, 1.0, s1, s2);
    const TaylorSeries t1 = taylor_coefficients(Z1, seq, {0.0, 0.0}, 2);
    double worst = std::max({abs(t1.coefficients[0]), abs(t1.coefficients[1] - 1.0),
                             abs(t1.coefficients[2])});
    const ComplexField F0 = seq.pair_at(0).F;
    const TaylorSeries t0 = taylor_coefficients(F0, seq, {0.0, 0.0}, 1);
    worst = std::max({worst, abs(t0.coefficients[0] - F0({0.0, 0.0})),
                      abs(t0.coefficients[1])});
    return worst;
  });

  // --- quaternionic reformulation ---------------------------------------

  suite.run("quaternion-algebra", 1e-12, [&] {
    std::mt19937_64 gen(opts.seed + 13);
    const Quaternion e1 = Quaternion::vector(1, 0, 0);
    const Quaternion e2 = Quaternion::vector(0, 1, 0);
    const Quaternion e3 = Quaternion::vector(0, 0, 1);
    double worst = 0.0;
    worst = std::max(worst, max_abs_component(e1 * e2 - e3));
    worst = std::max(worst, max_abs_component(e2 * e1 + e3));
    worst = std::max(worst, max_abs_component(e2 * e3 - e1));
    worst = std::max(worst, max_abs_component(e3 * e1 - e2));
    worst = std::max(worst, max_abs_component(e1 * e1 + Quaternion::scalar(1.0)));
    worst = std::max(worst, max_abs_component(e1 * e2 * e3 + Quaternion::scalar(1.0)));
    const Quaternion lhs = (Quaternion::scalar(1.0) + e1) * (Quaternion::scalar(1.0) - e1);
    worst = std::max(worst, max_abs_component(lhs - Quaternion::scalar(2.0)));
    for (int k = 0; k < 20; ++k) {
      Quaternion a{uniform_in(gen, -2, 2), uniform_in(gen, -2, 2), uniform_in(gen, -2, 2),
                   uniform_in(gen, -2, 2)};
      Quaternion b{uniform_in(gen, -2, 2), uniform_in(gen, -2, 2), uniform_in(gen, -2, 2),
                   uniform_in(gen, -2, 2)};
      worst = std::max(worst, std::abs(norm(a * b) - norm(a) * norm(b)) /
                                  std::max(norm(a) * norm(b), 1e-12));
    }
    return worst;
  });

  suite.run("bers-set-solves-ohm", res_tol, [&] {
    double worst = 0.0;
    const std::array<ExpSigmaModel, 3> models{
        ExpSigmaModel{s1, s2, opts.sigma3}, ExpSigmaModel{1, 1, 1}, ExpSigmaModel{0, 0, 0}};
    const std::vector<Point3> grid = box_grid(9);
    for (const ExpSigmaModel& model : models) {
      const BersSet set = bers_set(model);
      for (const QuatField* field : {&set.E1, &set.E2, &set.E3}) {
        for (const Point3& at : grid) {
          worst = std::max(worst, max_abs_component(ohm_residual(*field, model, at)));
        }
      }
    }
    return worst;
  });

  suite.run("quaternion-product-identity", 1e-6, [&] {
    std::mt19937_64 gen(opts.seed + 14);
    const ExpSigmaModel model{s1, s2, opts.sigma3};
    const BersSet set = bers_set(model);
    std::array<double, 5> c{};
    for (double& v : c) v = uniform_in(gen, -1.0, 1.0);
    const ScalarField3 phi = [c](const Point3& q) {
      return c[0] + c[1] * q.x1 - c[2] * q.x2 * q.x3 + c[3] * q.x1 * q.x1 + c[4] * q.x3;
    };
    const QuatField E1 = set.E1;
    const QuatField phiQ = [phi, E1](const Point3& q) { return E1(q) * phi(q); };
    const QuatField phi_scalar = [phi](const Point3& q) { return Quaternion::scalar(phi(q)); };
    double worst = 0.0;
    for (int k = 0; k < 20; ++k) {
      const Point3 at = random_box_point(gen, 0.9);
      Quaternion residual = mt_operator(phiQ, at);
      residual += phiQ(at) * sigma_vector(model, at);
      residual -= mt_operator(phi_scalar, at) * E1(at);
      worst = std::max(worst, max_abs_component(residual));
    }
    return worst;
  });

  suite.run("vekua-lift-compatibility", 1e-6, [&] {
    std::mt19937_64 gen(opts.seed + 15);
    const ExpSigmaModel model{s1, s2, opts.sigma3};
    const ComplexField W = closed_form_power_field(1, 1.0, s1, s2);
    const ScalarField3 phi1 = [W, model](const Point3& q) {
      const Point plane = plane_of(q);
      return W(plane).real() / model.p(plane);
    };
    const ScalarField3 phi2 = [W, model](const Point3& q) {
      const Point plane = plane_of(q);
      return model.p(plane) * W(plane).imag();
    };
    double worst = 0.0;
    for (int k = 0; k < 20; ++k) {
      const Point3 at = random_box_point(gen, 0.9);
      for (const double r : compatibility_residual(phi1, phi2, model, at)) {
        worst = std::max(worst, std::abs(r));
      }
    }
    return worst;
  });

  suite.run("vekua-lift-solves-ohm", 10.0 * res_tol, [&] {
    const ExpSigmaModel model{s1, s2, opts.sigma3};
    const ComplexField W = closed_form_power_field(1, 1.0, s1, s2);
    const ScalarField phi1([W, model](const Point& q) { return W(q).real() / model.p(q); });
    const ScalarField phi2([W, model](const Point& q) { return model.p(q) * W(q).imag(); });
    const QuatField lift = lift_plane_solution(phi1, phi2, model);
    double worst = 0.0;
    for (const Point3& at : box_grid(9)) {
      worst = std::max(worst, max_abs_component(ohm_residual(lift, model, at)));
    }
    return worst;
  });

  // --- currents, potentials, streamlines --------------------------------

  suite.run("currents-match-homogeneous-limit", 1e-6, [&] {
    std::mt19937_64 gen(opts.seed + 16);
    double worst = 0.0;
    for (int k = 0; k < 20; ++k) {
      const Point at = random_disk_point(gen);
      for (int m : {0, 1, 2}) {
        for (const Cplx coeff : {Cplx(1.0, 0.0), Cplx(0.0, 1.0)}) {
          const CurrentVector j =
              current_density(m, coeff, 1e-12, 1e-12, 1e-12, with_x3(at, 0.0));
          const CurrentVector jh = homogeneous_current(m, coeff, at);
          worst = std::max({worst, std::abs(j.j1 - jh.j1), std::abs(j.j2 - jh.j2),
                            std::abs(j.j3 - jh.j3)});
        }
      }
    }
    return worst;
  });

  suite.run("current-potential-consistency", res_tol, [&] {
    double worst = 0.0;
    for (const Point& at : disk_grid(opts.grid_resolution)) {
      for (int m : {0, 1}) {
        for (const Cplx coeff : {Cplx(1.0, 0.0), Cplx(0.0, 1.0)}) {
          worst = std::max(worst, gradient_consistency(m, coeff, s1, s2, at));
        }
      }
    }
    return worst;
  });

  suite.run("potential-divergence-free", 10.0 * res_tol, [&] {
    double worst = 0.0;
    for (const Point& at : disk_grid(opts.grid_resolution)) {
      for (int m : {0, 1}) {
        for (const Cplx coeff : {Cplx(1.0, 0.0), Cplx(0.0, 1.0)}) {
          worst = std::max(worst, std::abs(divergence_residual(m, coeff, s1, s2, at)));
        }
      }
    }
    return worst;
  });

  suite.run("potential-spot-values", 1e-12, [&] {
    double worst = 0.0;
    for (const double x2 : {-0.5, 0.25}) {
      worst = std::max(worst, std::abs(potential(0, 1.0, 3.0, 1.0, {0.0, x2}) - 1.0 / 6.0));
    }
    worst = std::max(worst,
                     std::abs(potential(0, Cplx(0, 1), 3.0, 1.0, {0.3, 0.0}) - 0.5));
    worst = std::max(worst, std::abs(potential(1, 1.0, 3.0, 1.0, {0.0, 0.0}) - 1.0 / 12.0));
    const Point q{0.2, -0.4};
    const double direct = q.x1 / 6.0 - q.x2 / 2.0 + std::exp(-6.0 * q.x1) / 36.0 -
                          std::exp(-2.0 * q.x2) / 4.0;
    worst = std::max(worst, std::abs(potential(1, Cplx(0, 1), 3.0, 1.0, q) - direct));
    worst = std::max(worst, std::abs(homogeneous_potential(0, 1.0, q) + q.x1));
    worst = std::max(worst, std::abs(homogeneous_potential(0, Cplx(0, 1), q) + q.x2));
    worst = std::max(worst, std::abs(homogeneous_potential(1, 1.0, q) + q.x1 * q.x2));
    worst = std::max(worst, std::abs(homogeneous_potential(1, Cplx(0, 1), q) -
                                     0.5 * (q.x1 * q.x1 - q.x2 * q.x2)));
    return worst;
  });

  suite.run("boundary-trace-values", 1e-12, [&] {
    const BoundaryTrace t0 = boundary_trace(0, 1.0, 3.0, 1.0, 24);
    double worst = std::abs(t0.homogeneous_display_scale - 1.0);
    worst = std::max(worst, std::abs(t0.samples[0].theta));
    worst = std::max(worst, std::abs(t0.samples[0].u - std::exp(-6.0) / 6.0));
    worst = std::max(worst, std::abs(t0.samples[6].theta - std::numbers::pi / 2.0));
    worst = std::max(worst, std::abs(t0.samples[6].u - 1.0 / 6.0));
    for (const BoundarySample& s : t0.samples) {
      worst = std::max(worst, std::abs(s.u_h + std::cos(s.theta)));
    }
    const BoundaryTrace t1 = boundary_trace(1, Cplx(0, 1), 3.0, 1.0, 24);
    worst = std::max(worst, std::abs(t1.homogeneous_display_scale - 20.0));
    for (const BoundarySample& s : t1.samples) {
      const Point at{std::cos(s.theta), std::sin(s.theta)};
      worst = std::max(worst, std::abs(s.u - potential(1, Cplx(0, 1), 3.0, 1.0, at)));
      worst = std::max(worst, std::abs(s.u_h - 0.5 * std::cos(2.0 * s.theta)));
    }
    return worst;
  });

  suite.run("streamline-step-rule", 1e-12, [&] {
    const PlaneCurrent field = plane_current(1, 1.0, s1, s2);
    const StepRule rule = StepRule::sigma_scaled(s1, s2, 1.0);
    const Streamline line = trace_streamline(field, {-0.3, -0.2}, rule, 4000);
    double worst = 0.0;
    for (std::size_t k = 0; k + 1 < line.vertices.size(); ++k) {
      const Point& a = line.vertices[k];
      const Point& b = line.vertices[k + 1];
      const double expected = rule.length(a, field(a));
      worst = std::max(worst, std::abs(std::hypot(b.x1 - a.x1, b.x2 - a.x2) - expected));
      if (k + 2 < line.vertices.size() || line.stop != StopReason::left_domain) {
        // Every vertex but a recorded exit point stays in the closed disk.
        if (b.x1 * b.x1 + b.x2 * b.x2 > 1.0) worst = std::max(worst, 1.0);
      }
    }
    return worst;
  });

  suite.run("streamline-terminations", 0.5, [&] {
    bool ok = true;
    const PlaneCurrent constant = plane_current(0, 1.0, 1e-12, 1e-12);
    const StepRule fixed = StepRule::sigma_scaled(0.0, 0.0, 1.0);
    const Streamline chord = trace_streamline(constant, {-0.5, 0.3}, fixed, 100000);
    ok = ok && chord.stop == StopReason::left_domain;
    for (std::size_t k = 0; k + 1 < chord.vertices.size(); ++k) {
      ok = ok && chord.vertices[k + 1].x1 > chord.vertices[k].x1;
      ok = ok && std::abs(chord.vertices[k].x2 - 0.3) < 1e-9;
    }
    const PlaneCurrent saddle = plane_current(1, 1.0, 1e-12, 1e-12);
    const Streamline stuck = trace_streamline(saddle, {0.0, 0.0}, fixed, 100);
    ok = ok && stuck.stop == StopReason::stagnation && stuck.vertices.size() == 1;
    const Streamline capped = trace_streamline(constant, {-0.5, 0.3}, fixed, 3);
    ok = ok && capped.stop == StopReason::max_steps && capped.vertices.size() == 4;
    return ok ? 0.0 : 1.0;
  });

  suite.run("streamline-saddle-invariant", 0.2, [&] {
    const PlaneCurrent saddle = plane_current(1, Cplx(0, 1), 1e-12, 1e-12);
    StepRule rule;
    rule.length = [](const Point&, const CurrentVector& j) {
      return 0.01 * std::hypot(j.j1, j.j2);
    };
    const Streamline line = trace_streamline(saddle, {0.5, 0.001}, rule, 100000);
    const double start = line.vertices.front().x1 * line.vertices.front().x2;
    double worst = 0.0;
    for (std::size_t k = 0; k + 1 < line.vertices.size(); ++k) {
      if (!(line.vertices[k + 1].x1 < line.vertices[k].x1) ||
          !(line.vertices[k + 1].x2 > line.vertices[k].x2)) {
        worst = std::max(worst, 1.0);
      }
      const double product = line.vertices[k].x1 * line.vertices[k].x2;
      worst = std::max(worst, std::abs(product / start - 1.0));
    }
    return worst;
  });

  // --- conductivity fit --------------------------------------------------

  const auto exp_grid = [] {
    SampleGrid grid;
    for (int r = 0; r < 5; ++r) {
      SampleRow row;
      row.ordinate = 1.0 - 0.5 * r;
      for (int c = 0; c < 5; ++c) {
        const double x1 = -1.0 + 0.5 * c;
        row.nodes.push_back({x1, std::exp(2.0 * x1 + 2.0 * row.ordinate)});
      }
      grid.rows.push_back(std::move(row));
    }
    return grid;
  };

  suite.run("fit-reproduces-samples", 1e-12, [&] {
    const SampleGrid grid = exp_grid();
    double worst = 0.0;
    for (const InterpKind kind : {InterpKind::pchip, InterpKind::linear}) {
      FitOptions fo;
      fo.kind = kind;
      const PiecewiseSeparableSigma fitted = fit_conductivity(grid, fo);
      for (const SampleRow& row : grid.rows) {
        for (const SampleNode& node : row.nodes) {
          const double got = fitted.evaluate({node.x1, row.ordinate});
          worst = std::max(worst, std::abs(got - node.sigma) / node.sigma);
        }
      }
    }
    return worst;
  });

  suite.run("fit-bands-separable", 1e-12, [&] {
    const PiecewiseSeparableSigma fitted = fit_conductivity(exp_grid(), {});
    double worst = 0.0;
    for (std::size_t j = 0; j < fitted.bands.size(); ++j) {
      worst = std::max(worst, separability_check(fitted, j, 8));
    }
    return worst;
  });

  suite.run("fit-band-partition", 0.5, [&] {
    std::mt19937_64 gen(opts.seed + 17);
    const PiecewiseSeparableSigma fitted = fit_conductivity(exp_grid(), {});
    bool ok = true;
    for (int k = 0; k < 1000; ++k) {
      const double x2 = uniform_in(gen, fitted.x2_min(), fitted.x2_max());
      int members = 0;
      for (std::size_t j = 0; j < fitted.bands.size(); ++j) {
        const Band& band = fitted.bands[j];
        const bool inside =
            (x2 >= band.lo && x2 < band.hi) || (j == 0 && x2 == band.hi);
        if (inside) ++members;
      }
      ok = ok && members == 1;
      ok = ok && fitted.band_index(x2) < fitted.bands.size();
    }
    // Boundary midpoints belong to the band above them; the range ends to
    // the outermost bands.
    ok = ok && fitted.band_index(0.75) == 0;
    ok = ok && fitted.band_index(0.25) == 1;
    ok = ok && fitted.band_index(-0.25) == 2;
    ok = ok && fitted.band_index(-0.75) == 3;
    ok = ok && fitted.band_index(1.0) == 0;
    ok = ok && fitted.band_index(-1.0) == 4;
    return ok ? 0.0 : 1.0;
  });

  suite.run("fit-positivity-linear", 0.5, [&] {
    std::mt19937_64 gen(opts.seed + 18);
    FitOptions fo;
    fo.kind = InterpKind::linear;
    const PiecewiseSeparableSigma fitted = fit_conductivity(exp_grid(), fo);
    double min_value = std::numeric_limits<double>::infinity();
    for (int k = 0; k < 500; ++k) {
      const Point at{uniform_in(gen, -1.5, 1.5), uniform_in(gen, -1.0, 1.0)};
      min_value = std::min(min_value, fitted.evaluate(at));
    }
    return min_value > 0.0 ? 0.0 : 1.0;
  });

  suite.run("fit-json-roundtrip", 1e-15, [&] {
    std::mt19937_64 gen(opts.seed + 19);
    const PiecewiseSeparableSigma fitted = fit_conductivity(exp_grid(), {});
    const PiecewiseSeparableSigma reloaded = fit_from_json(fit_to_json(fitted));
    double worst = std::abs(reloaded.K - fitted.K);
    for (int k = 0; k < 100; ++k) {
      const Point at{uniform_in(gen, -1.0, 1.0), uniform_in(gen, -1.0, 1.0)};
      worst = std::max(worst, std::abs(fitted.evaluate(at) - reloaded.evaluate(at)));
    }
    return worst;
  });

  suite.run("decimal-serialization-roundtrip", 1e-12, [&] {
    std::mt19937_64 gen(opts.seed + 20);
    double worst = 0.0;
    for (int k = 0; k < 200; ++k) {
      const double v = std::exp(uniform_in(gen, -12.0, 6.0)) *
                       (uniform01(gen) < 0.5 ? -1.0 : 1.0);
      const double back = std::strtod(fmt17(v).c_str(), nullptr);
      worst = std::max(worst, std::abs(back - v));
    }
    for (const double v : {1.0 / 3.0, std::exp(-6.0) / 6.0, std::sinh(0.5), 0.0}) {
      const double back = std::strtod(fmt17(v).c_str(), nullptr);
      worst = std::max(worst, std::abs(back - v));
    }
    return worst;
  });

  return suite.results;
}

bool all_passed(const std::vector<CheckResult>& results) {
  return std::all_of(results.begin(), results.end(),
                     [](const CheckResult& r) { return r.passed; });
}

std::string format_verification_table(const std::vector<CheckResult>& results) {
  std::ostringstream out;
  std::size_t failed = 0;
  for (std::size_t k = 0; k < results.size(); ++k) {
    const CheckResult& r = results[k];
    if (!r.passed) ++failed;
    char line[160];
    std::snprintf(line, sizeof(line), "%2zu/%zu  %s  %-40s  metric %10.3e  bound %8.1e\n",
                  k + 1, results.size(), r.passed ? "PASS" : "FAIL", r.name.c_str(), r.metric,
                  r.bound);
    out << line;
  }
  if (failed == 0) {
    out << "all " << results.size() << " checks passed\n";
  } else {
    out << failed << " of " << results.size() << " checks failed\n";
  }
  return out.str();
}

}  // namespace ohmflow
