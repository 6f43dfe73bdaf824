#pragma once

#include <functional>

namespace pldual {

struct MinimizeResult {
  double x = 0.0;
  double fx = 0.0;
  int iterations = 0;
};

// Golden-section search for a unimodal f on [lo, hi]. Stops once the
// bracket is narrower than rel_tol * |x|.
MinimizeResult golden_section(const std::function<double(double)>& f, double lo, double hi,
                              double rel_tol = 1e-10, int max_iterations = 400);

// Evaluates f on `points` log-spaced abscissae in [lo, hi] and returns the
// neighbours of the smallest sample as a bracket [first, second].
std::pair<double, double> log_scan_bracket(const std::function<double(double)>& f, double lo,
                                           double hi, int points = 41);

}  // namespace pldual
