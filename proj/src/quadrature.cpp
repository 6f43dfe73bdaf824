#include "pldual/quadrature.hpp"

#include <gsl/gsl_errno.h>
#include <gsl/gsl_integration.h>

#include <cmath>
#include <memory>
#include <mutex>
#include <sstream>

#include "pldual/errors.hpp"

namespace pldual {
namespace {

using Workspace = std::unique_ptr<gsl_integration_workspace, decltype(&gsl_integration_workspace_free)>;

double trampoline(double x, void* p) { return (*static_cast<const std::function<double(double)>*>(p))(x); }

struct Pass {
  int status;
  double value;
  double error;
};

Pass qag(const std::function<double(double)>& f, double a, double b, double epsabs, double epsrel,
         unsigned limit) {
  Workspace ws(gsl_integration_workspace_alloc(limit), &gsl_integration_workspace_free);
  if (!ws) fail(ErrorKind::convergence, "could not allocate quadrature workspace");
  gsl_function g{&trampoline, const_cast<std::function<double(double)>*>(&f)};
  Pass p{};
  p.status = gsl_integration_qag(&g, a, b, epsabs, epsrel, limit, GSL_INTEG_GAUSS21, ws.get(),
                                 &p.value, &p.error);
  return p;
}

}  // namespace

QuadratureResult integrate(const std::function<double(double)>& f, double a, double b,
                           double rel_tol, unsigned max_intervals) {
  static std::once_flag quiet;
  std::call_once(quiet, [] { gsl_set_error_handler_off(); });

  if (!(b > a) || !std::isfinite(a) || !std::isfinite(b))
    fail(ErrorKind::domain, "integration interval must be finite and non-empty");
  if (!(rel_tol > 0.0)) fail(ErrorKind::domain, "quadrature tolerance must be positive");

  // A coarse pass over |f| fixes the absolute target, so integrands that
  // cancel to nearly zero are not chased down to round-off.
  const std::function<double(double)> abs_f = [&](double x) { return std::abs(f(x)); };
  const Pass l1 = qag(abs_f, a, b, 0.0, 1e-4, max_intervals);
  if (!std::isfinite(l1.value))
    fail(ErrorKind::domain, "integrand produced a non-finite value (divergent integral?)");

  QuadratureResult out;
  out.l1_norm = l1.value;
  if (l1.value == 0.0) return out;

  const Pass p = qag(f, a, b, rel_tol * l1.value, 0.0, max_intervals);
  out.value = p.value;
  out.error_estimate = p.error;
  if (!std::isfinite(p.value))
    fail(ErrorKind::domain, "integrand produced a non-finite value (divergent integral?)");
  if (p.status != GSL_SUCCESS || p.error > rel_tol * l1.value) {
    std::ostringstream msg;
    msg << "quadrature on [" << a << ", " << b << "] missed tolerance " << rel_tol << " ("
        << gsl_strerror(p.status) << ", error estimate " << p.error << ", L1 " << l1.value << ")";
    fail(ErrorKind::convergence, msg.str());
  }
  return out;
}

}  // namespace pldual
