#pragma once

#include <functional>

#include "ohmflow/path.hpp"
#include "ohmflow/point.hpp"

namespace ohmflow {

struct QuadratureOptions {
  double tol = 1e-9;
  int max_depth = 20;
};

// Complex line integral of f along the path with d(zeta) = d(x2) + i d(x1).
// Each segment is integrated by 16-point Gauss-Legendre panels, bisected
// recursively until the whole-panel and two-half estimates differ by less
// than the (locally split) tolerance. Throws QuadratureError with the
// achieved estimate when max_depth is exceeded, EvaluationError on non-finite
// integrand values.
Cplx integrate_path(const std::function<Cplx(const Point&)>& f, const Path& path,
                    const QuadratureOptions& opts = {});

}  // namespace ohmflow
