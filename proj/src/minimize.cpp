#include "pldual/minimize.hpp"

#include <cmath>
#include <utility>
#include <vector>

#include "pldual/errors.hpp"

namespace pldual {

MinimizeResult golden_section(const std::function<double(double)>& f, double lo, double hi,
                              double rel_tol, int max_iterations) {
  if (!(hi > lo)) fail(ErrorKind::domain, "golden_section needs lo < hi");
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;

  double c = hi - inv_phi * (hi - lo);
  double d = lo + inv_phi * (hi - lo);
  double fc = f(c);
  double fd = f(d);
  int it = 0;
  for (; it < max_iterations; ++it) {
    if (hi - lo <= rel_tol * (std::abs(c) + std::abs(d))) break;
    if (fc < fd) {
      hi = d;
      d = c;
      fd = fc;
      c = hi - inv_phi * (hi - lo);
      fc = f(c);
    } else {
      lo = c;
      c = d;
      fc = fd;
      d = lo + inv_phi * (hi - lo);
      fd = f(d);
    }
  }
  if (it == max_iterations) fail(ErrorKind::convergence, "golden_section hit its iteration cap");
  return fc < fd ? MinimizeResult{c, fc, it} : MinimizeResult{d, fd, it};
}

std::pair<double, double> log_scan_bracket(const std::function<double(double)>& f, double lo,
                                           double hi, int points) {
  if (!(lo > 0.0) || !(hi > lo) || points < 3)
    fail(ErrorKind::domain, "log scan needs 0 < lo < hi and at least 3 points");
  std::vector<double> xs(static_cast<std::size_t>(points));
  const double step = std::log(hi / lo) / (points - 1);
  std::size_t best = 0;
  double best_f = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    xs[i] = lo * std::exp(step * static_cast<double>(i));
    const double v = f(xs[i]);
    if (i == 0 || v < best_f) {
      best = i;
      best_f = v;
    }
  }
  if (best == 0 || best + 1 == xs.size())
    fail(ErrorKind::convergence, "minimum sits on the edge of the scanned range");
  return {xs[best - 1], xs[best + 1]};
}

}  // namespace pldual
