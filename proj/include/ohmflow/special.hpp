#pragma once

namespace ohmflow {

// sinh(t)/t, with the removable singularity filled by the degree-6 Maclaurin
// polynomial 1 + t^2/6 + t^4/120 + t^6/5040 for |t| < 1e-4.
double sinhc(double t);

// (exp(-t) - sinhc(t)) / t, the kernel of the regrouped second-power closed
// forms; equals -1 at t = 0. Below |t| = 1e-4 the series
// -1 + t/3 - t^2/6 + t^3/30 - t^4/120 + t^5/840 is used, since the direct
// quotient loses accuracy to the cancellation of the leading 1s.
double exp_minus_sinhc_over_t(double t);

}  // namespace ohmflow
