#include "ohmflow/separable.hpp"

#include <cmath>

namespace ohmflow {

namespace {

// F = s1(x1) s2(x2), G = i / (s1 s2), with exact partials from the log-derivatives.
GeneratingPair ratio_pair(const Factor1D& s1, const Factor1D& s2) {
  auto f = [s1, s2](const Point& at) { return s1.value(at.x1) * s2.value(at.x2); };
  GeneratingPair pair;
  pair.F = ComplexField([f](const Point& at) { return Cplx(f(at), 0.0); },
                        [f, s1, s2](const Point& at) {
                          double v = f(at);
                          return std::pair<Cplx, Cplx>{Cplx(s1.log_derivative(at.x1) * v, 0.0),
                                                       Cplx(s2.log_derivative(at.x2) * v, 0.0)};
                        });
  pair.G = ComplexField([f](const Point& at) { return Cplx(0.0, 1.0 / f(at)); },
                        [f, s1, s2](const Point& at) {
                          Cplx g(0.0, 1.0 / f(at));
                          return std::pair<Cplx, Cplx>{-s1.log_derivative(at.x1) * g,
                                                       -s2.log_derivative(at.x2) * g};
                        });
  return pair;
}

Factor1D reciprocal(const Factor1D& f) {
  return {[f](double x) { return 1.0 / f.value(x); },
          [f](double x) { return -f.log_derivative(x); }};
}

}  // namespace

SeparableP exponential_p(double sigma1, double sigma2) {
  SeparableP p;
  p.p1 = {[sigma1](double x1) { return std::exp(-sigma1 * x1); },
          [sigma1](double) { return -sigma1; }};
  p.p2 = {[sigma2](double x2) { return std::exp(sigma2 * x2); },
          [sigma2](double) { return sigma2; }};
  return p;
}

SeparableP constant_p() {
  Factor1D one{[](double) { return 1.0; }, [](double) { return 0.0; }};
  return {one, one};
}

GeneratingSequence::GeneratingSequence(SeparableP p) : p_(std::move(p)) {
  even_ = ratio_pair(p_.p1, p_.p2);
  odd_ = ratio_pair(p_.p1, reciprocal(p_.p2));
}

GeneratingSequence::GeneratingSequence(SeparableP p, double sigma1, double sigma2)
    : GeneratingSequence(std::move(p)) {
  sigmas_ = std::pair<double, double>{sigma1, sigma2};
}

GeneratingSequence exponential_sequence(double sigma1, double sigma2) {
  return GeneratingSequence(exponential_p(sigma1, sigma2), sigma1, sigma2);
}

GeneratingSequence homogeneous_sequence() { return GeneratingSequence(constant_p(), 0.0, 0.0); }

}  // namespace ohmflow
