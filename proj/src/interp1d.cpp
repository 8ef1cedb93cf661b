#include "ohmflow/interp1d.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace ohmflow {

namespace {

// Fritsch-Carlson nodal derivatives: weighted harmonic mean of adjacent
// secant slopes, zero at local extrema of the data.
std::vector<double> pchip_slopes(const std::vector<double>& x, const std::vector<double>& y) {
  const std::size_t n = x.size();
  std::vector<double> d(n, 0.0);
  if (n == 1) return d;
  std::vector<double> h(n - 1), delta(n - 1);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    h[i] = x[i + 1] - x[i];
    delta[i] = (y[i + 1] - y[i]) / h[i];
  }
  if (n == 2) {
    d[0] = d[1] = delta[0];
    return d;
  }
  for (std::size_t i = 1; i + 1 < n; ++i) {
    if (delta[i - 1] == 0.0 || delta[i] == 0.0 || (delta[i - 1] > 0.0) != (delta[i] > 0.0)) {
      d[i] = 0.0;
    } else {
      const double w1 = 2.0 * h[i] + h[i - 1];
      const double w2 = h[i] + 2.0 * h[i - 1];
      d[i] = (w1 + w2) / (w1 / delta[i - 1] + w2 / delta[i]);
    }
  }
  // One-sided ends, limited so the end interval stays monotone.
  auto end_slope = [](double h0, double h1, double d0, double d1) {
    double s = ((2.0 * h0 + h1) * d0 - h0 * d1) / (h0 + h1);
    if ((s > 0.0) != (d0 > 0.0) || d0 == 0.0) {
      s = 0.0;
    } else if ((d0 > 0.0) != (d1 > 0.0) && std::abs(s) > 3.0 * std::abs(d0)) {
      s = 3.0 * d0;
    }
    return s;
  };
  d[0] = end_slope(h[0], h[1], delta[0], delta[1]);
  d[n - 1] = end_slope(h[n - 2], h[n - 3], delta[n - 2], delta[n - 3]);
  return d;
}

}  // namespace

Interp1D::Interp1D(std::vector<double> x, std::vector<double> y, InterpKind kind)
    : x_(std::move(x)), y_(std::move(y)), kind_(kind) {
  if (x_.size() != y_.size() || x_.empty()) {
    throw std::invalid_argument("interpolant needs equally many abscissae and ordinates");
  }
  for (std::size_t i = 0; i + 1 < x_.size(); ++i) {
    if (!(x_[i] < x_[i + 1])) {
      throw std::invalid_argument("interpolant abscissae must be strictly increasing");
    }
  }
  if (kind_ == InterpKind::pchip && x_.size() >= 2) slope_ = pchip_slopes(x_, y_);
}

std::size_t Interp1D::interval(double x) const {
  // Index i with x in [x_i, x_{i+1}); callers clamp outside queries first.
  const auto it = std::upper_bound(x_.begin(), x_.end(), x);
  const std::size_t idx = static_cast<std::size_t>(it - x_.begin());
  if (idx == 0) return 0;
  return std::min(idx - 1, x_.size() - 2);
}

double Interp1D::value(double x) const {
  if (x <= x_.front()) return y_.front();
  if (x >= x_.back()) return y_.back();
  const std::size_t i = interval(x);
  const double h = x_[i + 1] - x_[i];
  const double t = (x - x_[i]) / h;
  if (kind_ == InterpKind::linear) return y_[i] + t * (y_[i + 1] - y_[i]);
  // Cubic Hermite basis on [0,1].
  const double t2 = t * t, t3 = t2 * t;
  const double h00 = 2.0 * t3 - 3.0 * t2 + 1.0;
  const double h10 = t3 - 2.0 * t2 + t;
  const double h01 = -2.0 * t3 + 3.0 * t2;
  const double h11 = t3 - t2;
  return h00 * y_[i] + h * h10 * slope_[i] + h01 * y_[i + 1] + h * h11 * slope_[i + 1];
}

double Interp1D::derivative(double x) const {
  if (x_.size() < 2 || x < x_.front() || x > x_.back()) return 0.0;
  const std::size_t i = interval(x);
  const double h = x_[i + 1] - x_[i];
  const double t = (x - x_[i]) / h;
  if (kind_ == InterpKind::linear) return (y_[i + 1] - y_[i]) / h;
  const double t2 = t * t;
  const double dh00 = (6.0 * t2 - 6.0 * t) / h;
  const double dh10 = 3.0 * t2 - 4.0 * t + 1.0;
  const double dh01 = (-6.0 * t2 + 6.0 * t) / h;
  const double dh11 = 3.0 * t2 - 2.0 * t;
  return dh00 * y_[i] + dh10 * slope_[i] + dh01 * y_[i + 1] + dh11 * slope_[i + 1];
}

}  // namespace ohmflow
