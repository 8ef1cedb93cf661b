#pragma once

#include <vector>

namespace ohmflow {

enum class InterpKind { pchip, linear };

// 1-D interpolant over strictly increasing abscissae. pchip is the
// Fritsch-Carlson monotone cubic: it preserves monotonicity of the data, so
// positive nodes give a positive interpolant. Queries outside the abscissa
// range are clamped to the nearest end value (derivative 0 there).
class Interp1D {
 public:
  Interp1D() = default;
  Interp1D(std::vector<double> x, std::vector<double> y, InterpKind kind = InterpKind::pchip);

  double value(double x) const;
  double derivative(double x) const;

  InterpKind kind() const { return kind_; }
  const std::vector<double>& abscissae() const { return x_; }
  const std::vector<double>& ordinates() const { return y_; }

 private:
  std::size_t interval(double x) const;

  std::vector<double> x_, y_;
  std::vector<double> slope_;  // nodal derivatives (pchip) or unused (linear)
  InterpKind kind_ = InterpKind::pchip;
};

}  // namespace ohmflow
