#include "ohmflow/quaternion_ohm.hpp"

#include <cmath>

#include "ohmflow/errors.hpp"

namespace ohmflow {

namespace {

Quaternion checked(const Quaternion& q) {
  if (!std::isfinite(q.q0) || !std::isfinite(q.q1) || !std::isfinite(q.q2) ||
      !std::isfinite(q.q3)) {
    throw EvaluationError("non-finite quaternion field value on derivative stencil");
  }
  return q;
}

Quaternion partial(const QuatField& q, const Point3& at, int axis, double h) {
  Point3 hi = at, lo = at;
  switch (axis) {
    case 0:
      hi.x1 += h;
      lo.x1 -= h;
      break;
    case 1:
      hi.x2 += h;
      lo.x2 -= h;
      break;
    default:
      hi.x3 += h;
      lo.x3 -= h;
      break;
  }
  Quaternion d = checked(q(hi));
  d -= checked(q(lo));
  return d * (0.5 / h);
}

Quaternion mt_once(const QuatField& q, const Point3& at, double h) {
  const Quaternion d1 = partial(q, at, 0, h);
  const Quaternion d2 = partial(q, at, 1, h);
  const Quaternion d3 = partial(q, at, 2, h);
  // e1 d1 + e2 d2 + e3 d3 under the Hamilton table.
  Quaternion out;
  out.q0 = -d1.q1 - d2.q2 - d3.q3;           // -div of the vector part
  out.q1 = d1.q0 + d2.q3 - d3.q2;            // grad q0 + rot, component 1
  out.q2 = d2.q0 + d3.q1 - d1.q3;            // component 2
  out.q3 = d3.q0 + d1.q2 - d2.q1;            // component 3
  return out;
}

}  // namespace

Quaternion mt_operator(const QuatField& q, const Point3& at, double h, bool richardson) {
  if (!richardson) return mt_once(q, at, h);
  // One Richardson step for the O(h^2) central stencil: (4 D_{h/2} - D_h)/3.
  Quaternion fine = mt_once(q, at, 0.5 * h) * (4.0 / 3.0);
  fine -= mt_once(q, at, h) * (1.0 / 3.0);
  return fine;
}

Quaternion sigma_vector(const ExpSigmaModel& model, const Point3&) {
  return Quaternion::vector(model.sigma1, model.sigma2, model.sigma3);
}

double bers_amplitude1(const ExpSigmaModel& model, const Point3& at) {
  return std::exp(-model.sigma1 * at.x1 + model.sigma2 * at.x2 + model.sigma3 * at.x3);
}

double bers_amplitude2(const ExpSigmaModel& model, const Point3& at) {
  return std::exp(model.sigma1 * at.x1 - model.sigma2 * at.x2 + model.sigma3 * at.x3);
}

BersSet bers_set(const ExpSigmaModel& model) {
  BersSet set;
  set.E1 = [model](const Point3& at) {
    return Quaternion::vector(bers_amplitude1(model, at), 0.0, 0.0);
  };
  set.E2 = [model](const Point3& at) {
    return Quaternion::vector(0.0, bers_amplitude2(model, at), 0.0);
  };
  set.E3 = [model](const Point3& at) {
    const double amp =
        std::exp(model.sigma1 * at.x1 + model.sigma2 * at.x2 - model.sigma3 * at.x3);
    return Quaternion::vector(0.0, 0.0, amp);
  };
  return set;
}

Quaternion ohm_residual(const QuatField& E, const ExpSigmaModel& model, const Point3& at,
                        double h) {
  Quaternion res = mt_operator(E, at, h);
  res += checked(E(at)) * sigma_vector(model, at);
  return res;
}

std::array<double, 4> compatibility_residual(const ScalarField3& phi1, const ScalarField3& phi2,
                                             const ExpSigmaModel& model, const Point3& at,
                                             double h) {
  auto partial3 = [h](const ScalarField3& f, const Point3& p, int axis) {
    Point3 hi = p, lo = p;
    switch (axis) {
      case 0:
        hi.x1 += h;
        lo.x1 -= h;
        break;
      case 1:
        hi.x2 += h;
        lo.x2 -= h;
        break;
      default:
        hi.x3 += h;
        lo.x3 -= h;
        break;
    }
    const double a = f(hi), b = f(lo);
    if (!std::isfinite(a) || !std::isfinite(b)) {
      throw EvaluationError("non-finite scalar field value on derivative stencil");
    }
    return (a - b) / (2.0 * h);
  };
  const double pw = model.p(plane_of(at));
  const double inv_p2 = 1.0 / (pw * pw);
  return {partial3(phi1, at, 0) + inv_p2 * partial3(phi2, at, 1),
          partial3(phi1, at, 1) - inv_p2 * partial3(phi2, at, 0),
          partial3(phi1, at, 2), partial3(phi2, at, 2)};
}

QuatField lift_plane_solution(const ScalarField& phi1, const ScalarField& phi2,
                              const ExpSigmaModel& model) {
  return [phi1, phi2, model](const Point3& at) {
    const Point xy = plane_of(at);
    Quaternion out = Quaternion::vector(bers_amplitude1(model, at), 0.0, 0.0) * phi1(xy);
    out += Quaternion::vector(0.0, bers_amplitude2(model, at), 0.0) * phi2(xy);
    return out;
  };
}

}  // namespace ohmflow
