#pragma once

#include <functional>

namespace pldual {

struct QuadratureResult {
  double value = 0.0;
  double error_estimate = 0.0;
  double l1_norm = 0.0;  // int |f|, to the accuracy of a coarse pass
};

// Globally adaptive 21-point Gauss-Kronrod on a finite interval, asked for an
// absolute error of rel_tol * int |f|. Throws Error(convergence) when the
// estimate cannot be brought under that bound within max_intervals.
QuadratureResult integrate(const std::function<double(double)>& f, double a, double b,
                           double rel_tol = 1e-10, unsigned max_intervals = 2000);

}  // namespace pldual
