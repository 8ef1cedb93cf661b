#include "ohmflow/quadrature.hpp"

#include <array>
#include <cmath>
#include <numbers>

#include "ohmflow/errors.hpp"

namespace ohmflow {

namespace {

// 16-point Gauss-Legendre rule on [-1, 1] (positive abscissae; the rule is
// symmetric).
constexpr std::array<double, 8> k_gl16_x = {
    0.0950125098376374401853, 0.2816035507792589132304, 0.4580167776572273863424,
    0.6178762444026437484467, 0.7554044083550030338951, 0.8656312023878317438805,
    0.9445750230732325760780, 0.9894009349916499325962};
constexpr std::array<double, 8> k_gl16_w = {
    0.1894506104550684962854, 0.1826034150449235888667, 0.1691565193950025381893,
    0.1495959888165767320815, 0.1246289712555338720525, 0.0951585116824927848099,
    0.0622535239386478928628, 0.0271524594117540948518};

struct Segment {
  Point a, b;
};

Point lerp(const Segment& s, double t) {
  return {s.a.x1 + t * (s.b.x1 - s.a.x1), s.a.x2 + t * (s.b.x2 - s.a.x2)};
}

Cplx checked(const std::function<Cplx(const Point&)>& f, const Point& at) {
  Cplx v = f(at);
  if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
    throw EvaluationError("non-finite integrand value");
  return v;
}

// One Gauss-Legendre panel over the whole segment, d(zeta) constant.
Cplx gl16(const std::function<Cplx(const Point&)>& f, const Segment& s) {
  Cplx dz = to_zeta(s.b) - to_zeta(s.a);
  Cplx sum = 0.0;
  for (int k = 0; k < 8; ++k) {
    double t_plus = 0.5 * (1.0 + k_gl16_x[k]);
    double t_minus = 0.5 * (1.0 - k_gl16_x[k]);
    sum += k_gl16_w[k] * (checked(f, lerp(s, t_plus)) + checked(f, lerp(s, t_minus)));
  }
  return 0.5 * sum * dz;
}

Cplx adapt(const std::function<Cplx(const Point&)>& f, const Segment& s, double tol, int depth,
           int max_depth) {
  Cplx whole = gl16(f, s);
  Point mid = lerp(s, 0.5);
  Cplx left = gl16(f, {s.a, mid});
  Cplx right = gl16(f, {mid, s.b});
  double err = std::abs(whole - (left + right));
  if (err <= tol) return left + right;
  if (depth >= max_depth)
    throw QuadratureError("adaptive quadrature did not converge within depth limit", err);
  return adapt(f, {s.a, mid}, 0.5 * tol, depth + 1, max_depth) +
         adapt(f, {mid, s.b}, 0.5 * tol, depth + 1, max_depth);
}

}  // namespace

Path Path::circle(const Point& center, double radius, int n_vertices) {
  Path path;
  path.vertices.reserve(n_vertices + 1);
  for (int k = 0; k <= n_vertices; ++k) {
    double t = 2.0 * std::numbers::pi * k / n_vertices;
    // Positive orientation of zeta = x2 + i x1: x2 along cos, x1 along sin.
    path.vertices.push_back({center.x1 + radius * std::sin(t), center.x2 + radius * std::cos(t)});
  }
  return path;
}

bool Path::is_closed(double tol) const {
  return std::abs(vertices.front().x1 - vertices.back().x1) <= tol &&
         std::abs(vertices.front().x2 - vertices.back().x2) <= tol;
}

Cplx integrate_path(const std::function<Cplx(const Point&)>& f, const Path& path,
                    const QuadratureOptions& opts) {
  std::size_t n_segments = path.vertices.size() - 1;
  double seg_tol = opts.tol / static_cast<double>(n_segments);
  Cplx total = 0.0;
  for (std::size_t k = 0; k < n_segments; ++k) {
    Segment s{path.vertices[k], path.vertices[k + 1]};
    if (s.a.x1 == s.b.x1 && s.a.x2 == s.b.x2) continue;
    total += adapt(f, s, seg_tol, 0, opts.max_depth);
  }
  return total;
}

}  // namespace ohmflow
