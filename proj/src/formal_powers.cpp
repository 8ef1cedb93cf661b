#include "ohmflow/formal_powers.hpp"

#include <cmath>

#include "ohmflow/errors.hpp"
#include "ohmflow/special.hpp"

namespace ohmflow {

namespace {

QuadratureOptions tightened(const QuadratureOptions& opts) {
  QuadratureOptions inner = opts;
  inner.tol = std::max(0.05 * opts.tol, 1e-13);
  return inner;
}

Cplx closed_form_unit(int m, double s1, double s2, const Point& at) {
  double a = s1 * at.x1, b = s2 * at.x2;
  switch (m) {
    case 0:
      return std::exp(-a + b);
    case 1:
      return {at.x2 * std::exp(-a) * sinhc(b), at.x1 * std::exp(-b) * sinhc(a)};
    default: {
      double H_a = exp_minus_sinhc_over_t(a);
      double H_mb = exp_minus_sinhc_over_t(-b);
      double re = at.x1 * at.x1 * std::exp(b) * H_a - at.x2 * at.x2 * std::exp(-a) * H_mb;
      double im = 2.0 * at.x1 * at.x2 * sinhc(a) * sinhc(b);
      return {re, im};
    }
  }
}

Cplx closed_form_imag(int m, double s1, double s2, const Point& at) {
  double a = s1 * at.x1, b = s2 * at.x2;
  switch (m) {
    case 0:
      return Cplx(0.0, 1.0) * std::exp(a - b);
    case 1:
      return {-at.x1 * std::exp(b) * sinhc(a), at.x2 * std::exp(a) * sinhc(b)};
    default: {
      double H_ma = exp_minus_sinhc_over_t(-a);
      double H_b = exp_minus_sinhc_over_t(b);
      double re = -2.0 * at.x1 * at.x2 * sinhc(a) * sinhc(b);
      double im = at.x1 * at.x1 * std::exp(-b) * H_ma - at.x2 * at.x2 * std::exp(a) * H_b;
      return {re, im};
    }
  }
}

}  // namespace

Cplx fg_integral(const ComplexField& W, const GeneratingPair& pair, const Path& path,
                 const QuadratureOptions& opts) {
  AdjointPair adj = adjoint_pair(pair);
  ComplexField Fstar = adj.Fstar, Gstar = adj.Gstar;
  Cplx i_f = integrate_path([&](const Point& p) { return Fstar(p) * W(p); }, path, opts);
  Cplx i_g = integrate_path([&](const Point& p) { return Gstar(p) * W(p); }, path, opts);
  const Point& end = path.end();
  return pair.G(end) * i_f.real() + pair.F(end) * i_g.real();
}

ComplexField formal_power_zero(const GeneratingSequence& seq, int n, Cplx a0, const Point& z0) {
  const GeneratingPair& pair = seq.pair_at(n);
  Decomposition d = decompose(a0, pair.F(z0), pair.G(z0));
  ComplexField F = pair.F, G = pair.G;
  double lambda = d.phi, mu = d.psi;
  if (F.has_exact_partials() && G.has_exact_partials()) {
    return ComplexField(
        [F, G, lambda, mu](const Point& p) { return lambda * F(p) + mu * G(p); },
        [F, G, lambda, mu](const Point& p) {
          auto [F1, F2] = F.exact_partials(p);
          auto [G1, G2] = G.exact_partials(p);
          return std::pair<Cplx, Cplx>{lambda * F1 + mu * G1, lambda * F2 + mu * G2};
        });
  }
  return ComplexField([F, G, lambda, mu](const Point& p) { return lambda * F(p) + mu * G(p); });
}

Cplx formal_power_along(const GeneratingSequence& seq, const FormalPowerSpec& sp,
                        const Path& path, const QuadratureOptions& opts) {
  if (sp.m == 0) return formal_power_zero(seq, sp.n, sp.a, sp.z0)(path.end());
  FormalPowerSpec inner{sp.n + 1, sp.m - 1, sp.a, sp.z0};
  QuadratureOptions inner_opts = tightened(opts);
  ComplexField integrand(
      [&seq, inner, inner_opts](const Point& p) { return formal_power(seq, inner, p, inner_opts); });
  return static_cast<double>(sp.m) * fg_integral(integrand, seq.pair_at(sp.n), path, opts);
}

Cplx formal_power(const GeneratingSequence& seq, const FormalPowerSpec& sp, const Point& at,
                  const QuadratureOptions& opts) {
  if (sp.m == 0) return formal_power_zero(seq, sp.n, sp.a, sp.z0)(at);
  return formal_power_along(seq, sp, Path::segment(sp.z0, at), opts);
}

ComplexField formal_power_field(const GeneratingSequence& seq, const FormalPowerSpec& sp,
                                const QuadratureOptions& opts) {
  // Sequence copied so the field owns everything it evaluates through.
  return ComplexField([seq, sp, opts](const Point& p) { return formal_power(seq, sp, p, opts); });
}

Cplx closed_form_power(int m, Cplx coeff, double sigma1, double sigma2, const Point& at) {
  if (m < 0 || m > 2)
    throw ClosedFormUnavailableError("closed-form power implemented for m = 0, 1, 2 only");
  Cplx value = 0.0;
  if (coeff.real() != 0.0) value += coeff.real() * closed_form_unit(m, sigma1, sigma2, at);
  if (coeff.imag() != 0.0) value += coeff.imag() * closed_form_imag(m, sigma1, sigma2, at);
  return value;
}

ComplexField closed_form_power_field(int m, Cplx coeff, double sigma1, double sigma2) {
  if (m < 0 || m > 2)
    throw ClosedFormUnavailableError("closed-form power implemented for m = 0, 1, 2 only");
  return ComplexField(
      [m, coeff, sigma1, sigma2](const Point& p) { return closed_form_power(m, coeff, sigma1, sigma2, p); });
}

TaylorSeries taylor_coefficients(const ComplexField& W, const GeneratingSequence& seq,
                                 const Point& z0, int order, TaylorDiagnostics* diag) {
  TaylorSeries series;
  series.z0 = z0;
  if (diag) {
    diag->derivative_magnitude.clear();
    diag->noise_flagged = false;
  }
  ComplexField current = W;
  double factorial = 1.0, power_of_two = 1.0;
  double level_h = k_default_fd_step;  // step used to build the derivative just evaluated
  double previous_magnitude = 0.0;
  for (int k = 0; k <= order; ++k) {
    Cplx derivative = current(z0);
    if (k > 0) {
      factorial *= k;
      power_of_two *= 2.0;
    }
    series.coefficients.push_back(derivative / (power_of_two * factorial));
    double magnitude = std::abs(derivative);
    if (diag) {
      diag->derivative_magnitude.push_back(magnitude);
      if (k > 0 && previous_magnitude > 0.0 && magnitude / previous_magnitude > 1.0 / level_h)
        diag->noise_flagged = true;
    }
    previous_magnitude = magnitude;
    if (k == order) break;
    // Next Bers derivative; each nesting level widens the step (h^(2/3))
    // because the inner stencil noise grows as eps/h per level.
    level_h = k == 0 ? k_default_fd_step : std::pow(level_h, 2.0 / 3.0);
    GeneratingPair pair = seq.pair_at(k);
    ComplexField previous = current;
    double h = level_h;
    current = ComplexField(
        [previous, pair, h](const Point& p) { return bers_derivative(previous, pair, p, h); });
  }
  return series;
}

Cplx taylor_eval(const TaylorSeries& series, const GeneratingSequence& seq, const Point& at,
                 const QuadratureOptions& opts) {
  const auto& sigmas = seq.exponential_sigmas();
  bool centered = series.z0.x1 == 0.0 && series.z0.x2 == 0.0;
  Cplx sum = 0.0;
  for (int m = 0; m < static_cast<int>(series.coefficients.size()); ++m) {
    Cplx a_m = series.coefficients[m];
    if (a_m == Cplx(0.0, 0.0)) continue;
    if (sigmas && centered && m <= 2) {
      sum += closed_form_power(m, a_m, sigmas->first, sigmas->second, at);
    } else {
      sum += formal_power(seq, {0, m, a_m, series.z0}, at, opts);
    }
  }
  return sum;
}

double path_independence_check(const ComplexField& W, const GeneratingPair& pair,
                               const Path& loop, const QuadratureOptions& opts) {
  AdjointPair adj = adjoint_pair(pair);
  ComplexField Fstar = adj.Fstar, Gstar = adj.Gstar;
  Cplx i_f = integrate_path([&](const Point& p) { return Fstar(p) * W(p); }, loop, opts);
  Cplx i_g = integrate_path([&](const Point& p) { return Gstar(p) * W(p); }, loop, opts);
  return std::abs(Cplx(i_g.real(), i_f.real()));
}

}  // namespace ohmflow
