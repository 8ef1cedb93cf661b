#pragma once

#include <complex>

namespace ohmflow {

using Cplx = std::complex<double>;

// Plane point. The complex coordinate used throughout the library is
//
//   zeta = x2 + i * x1
//
// (real axis carries x2, imaginary axis carries x1). Keeping the coordinates
// as named fields instead of a bare complex guards against swapping them.
struct Point {
  double x1 = 0.0;
  double x2 = 0.0;
};

struct Point3 {
  double x1 = 0.0;
  double x2 = 0.0;
  double x3 = 0.0;
};

inline Cplx to_zeta(const Point& p) { return {p.x2, p.x1}; }
inline Point from_zeta(Cplx z) { return {z.imag(), z.real()}; }
inline Point plane_of(const Point3& p) { return {p.x1, p.x2}; }
inline Point3 with_x3(const Point& p, double x3) { return {p.x1, p.x2, x3}; }

}  // namespace ohmflow
