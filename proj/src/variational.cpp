#include "pldual/variational.hpp"

#include <cmath>
#include <string>

#include "pldual/errors.hpp"
#include "pldual/gamma_kit.hpp"
#include "pldual/limits.hpp"
#include "pldual/quadrature.hpp"

namespace pldual {
namespace {

// ln of the tail cutoff: the weight r^(2p+d-1) e^{-2a r^s} is dropped below
// this fraction of its peak.
constexpr double kLogTailCutoff = -69.0;  // ~1e-30

// log of r^(2p+d-1) e^{-2 a r^s}
struct LogWeight {
  double power;
  double two_a;
  double s;

  double operator()(double r) const { return power * std::log(r) - two_a * std::pow(r, s); }
  double peak_r() const { return std::pow(power / (two_a * s), 1.0 / s); }
};

// Finds r on the decreasing (outward) or increasing (inward) side of the
// peak where the log-weight has dropped by |kLogTailCutoff|.
double cutoff_radius(const LogWeight& w, double r_peak, bool outward) {
  const double target = w(r_peak) + kLogTailCutoff;
  double near = r_peak;
  double far = r_peak;
  for (int i = 0; i < 200; ++i) {
    far = outward ? far * 2.0 : far * 0.5;
    if (w(far) < target) break;
    near = far;
  }
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (near + far);
    if (w(mid) < target) far = mid;
    else near = mid;
  }
  return far;
}

struct Window {
  double lo;
  double peak;
  double hi;
};

Window integration_window(const LogWeight& w) {
  if (!(w.power > 0.0))
    fail(ErrorKind::domain, "trial weight does not vanish at the origin; integral diverges");
  const double peak = w.peak_r();
  return {cutoff_radius(w, peak, false), peak, cutoff_radius(w, peak, true)};
}

double integrate_window(const std::function<double(double)>& f, const Window& win,
                        double rel_tol) {
  // [0, win.lo] carries less than 1e-30 of the peak weight and is dropped.
  return integrate(f, win.lo, win.peak, rel_tol).value +
         integrate(f, win.peak, win.hi, rel_tol).value;
}

void require_nonneg(int v, const char* what) {
  if (v < 0) fail(ErrorKind::domain, std::string(what) + " must be >= 0");
}

}  // namespace

void TrialFunction::validate() const {
  if (!(scale > 0.0) || !(stretch > 0.0) || !(power >= 0.0) || !std::isfinite(scale) ||
      !std::isfinite(stretch) || !std::isfinite(power))
    fail(ErrorKind::domain, "trial function needs scale > 0, stretch > 0, power >= 0");
}

double TrialFunction::operator()(double r) const {
  return std::exp(-scale * std::pow(r, stretch)) * std::pow(r, power);
}

double hydrogen_exact_energy(int N, int l, int d, const PhysicalConstants& c) {
  c.validate();
  require_nonneg(N, "radial quantum number");
  require_nonneg(l, "angular momentum");
  if (d < 3) fail(ErrorKind::domain, "hydrogen spectrum is provided for d >= 3");
  const double n_eff = N + l + 0.5 * (d - 1);
  return -0.5 * c.hartree() / (n_eff * n_eff);
}

VariationalResult hydrogen_variational_min(int l, int d, const PhysicalConstants& c) {
  VariationalResult out;
  out.exact_ground_energy = hydrogen_exact_energy(0, l, d, c);
  out.ratio = ratio_hydrogen(l, d);
  out.min_mean_energy = out.exact_ground_energy * out.ratio;

  const RadialProblem prob = RadialProblem::hydrogen(d, l, c);
  // The optimum sits near a0^-2 / (l + d/2)^2; scan two decades either side.
  const double a0 = c.bohr_radius();
  const double guess = 1.0 / (a0 * a0 * (l + 0.5 * d) * (l + 0.5 * d));
  const MinimizeResult m = minimize_trial_scale(2.0, l, prob, guess / 100.0, guess * 100.0);
  out.optimal_scale = m.x;
  out.numeric_min_energy = m.fx;
  return out;
}

double hydrogen_alpha_star(int l, int d, const PhysicalConstants& c) {
  require_nonneg(l, "angular momentum");
  if (d < 3) fail(ErrorKind::domain, "hydrogen trial needs d >= 3");
  const double nu = l + 0.5 * d;
  const double meg = c.mass * c.charge_sq * gamma_ratio(nu - 0.5, nu);
  const double h2 = c.hbar * c.hbar;
  return meg * meg / (2.0 * h2 * h2 * nu * nu);
}

double oscillator_exact_energy(int n, int L, double omega, const PhysicalConstants& c,
                               bool duality_image) {
  c.validate();
  require_nonneg(n, "oscillator quantum number");
  require_nonneg(L, "angular momentum");
  if (!(omega > 0.0)) fail(ErrorKind::domain, "oscillator frequency must be positive");
  if (duality_image && n % 2 != 0)
    fail(ErrorKind::domain, "odd n is not the image of a hydrogen level (n = 2N)");
  return c.hbar * omega * (n + L + 2.0);
}

double oscillator_mean_energy(double a, int L, double K, const PhysicalConstants& c) {
  c.validate();
  require_nonneg(L, "angular momentum");
  if (!(a > 0.0)) fail(ErrorKind::domain, "trial scale must be positive");
  if (!(K > 0.0)) fail(ErrorKind::domain, "oscillator coupling must be positive");
  const double g = gamma_ratio(0.5 * (L + 3), 0.5 * L + 1.0);
  return g * (2.0 * a * c.hbar * c.hbar * (L + 3) + K * c.mass) / (std::sqrt(2.0 * a) * c.mass);
}

double oscillator_alpha_star(int L, double K, const PhysicalConstants& c) {
  c.validate();
  require_nonneg(L, "angular momentum");
  if (!(K > 0.0)) fail(ErrorKind::domain, "oscillator coupling must be positive");
  return K * c.mass / (2.0 * c.hbar * c.hbar * (L + 3));
}

MinimizeResult oscillator_alpha_numeric(int L, double K, const PhysicalConstants& c) {
  const double seed = oscillator_alpha_star(L, K, c);
  return golden_section([&](double a) { return oscillator_mean_energy(a, L, K, c); }, seed / 10.0,
                        seed * 10.0, 1e-12);
}

VariationalResult oscillator_variational_min(int L, double omega, const PhysicalConstants& c) {
  c.validate();
  require_nonneg(L, "angular momentum");
  if (!(omega > 0.0)) fail(ErrorKind::domain, "oscillator frequency must be positive");
  const double K = 0.5 * c.mass * omega * omega;
  VariationalResult out;
  out.optimal_scale = oscillator_alpha_star(L, K, c);
  const double half = 0.5 * (L + 3);
  out.min_mean_energy =
      2.0 * c.hbar * omega * std::sqrt(half) * gamma_ratio(half, 0.5 * L + 1.0);
  out.exact_ground_energy = c.hbar * omega * (L + 2.0);
  out.ratio = out.min_mean_energy / out.exact_ground_energy;
  out.numeric_min_energy = oscillator_mean_energy(out.optimal_scale, L, K, c);
  return out;
}

double quadrature_norm(const TrialFunction& trial, double dim, double rel_tol) {
  trial.validate();
  const LogWeight w{2.0 * trial.power + dim - 1.0, 2.0 * trial.scale, trial.stretch};
  const Window win = integration_window(w);
  const double log_peak = w(win.peak);
  const double integral = integrate_window(
      [&](double r) { return std::exp(w(r) - log_peak); }, win, rel_tol);
  return integral * std::exp(log_peak);
}

double quadrature_mean_energy(const TrialFunction& trial, const RadialProblem& prob,
                              double rel_tol) {
  trial.validate();
  prob.validate();
  const double d = prob.spatial_dim;
  const double l = prob.angular_momentum;
  const double p = trial.power;
  const double s = trial.stretch;
  const double a = trial.scale;
  const double kin = prob.constants.kinetic_scale();
  const PowerLawPotential V = prob.potential;

  const double beta = V.exponent;
  if (!(2.0 * p + d - 1.0 + std::min(beta, 0.0) > -1.0))
    fail(ErrorKind::domain, "potential term is not integrable at the origin");

  // (R'' + (d-1)/r R' - l(l+d-2)/r^2 R) / R
  //   = c2 / r^2 - a s (2p + s + d - 2) r^(s-2) + a^2 s^2 r^(2s-2)
  const double c2 = p * p + (d - 2.0) * p - l * (l + d - 2.0);
  const double c1 = a * s * (2.0 * p + s + d - 2.0);
  const double c0 = a * a * s * s;
  auto local_energy = [&](double r) {
    const double rs = std::pow(r, s - 2.0);
    const double lap = c2 / (r * r) - c1 * rs + c0 * rs * std::pow(r, s);
    return -kin * lap + V(r);
  };

  const LogWeight w{2.0 * p + d - 1.0, 2.0 * a, s};
  const Window win = integration_window(w);
  const double log_peak = w(win.peak);
  auto weight = [&](double r) { return std::exp(w(r) - log_peak); };

  const double num = integrate_window([&](double r) { return weight(r) * local_energy(r); }, win,
                                      rel_tol);
  const double den = integrate_window(weight, win, rel_tol);
  return num / den;
}

MinimizeResult minimize_trial_scale(double stretch, double power, const RadialProblem& prob,
                                    double lo, double hi) {
  auto energy = [&](double a) {
    return quadrature_mean_energy(TrialFunction{a, stretch, power}, prob);
  };
  const auto [blo, bhi] = log_scan_bracket(energy, lo, hi);
  return golden_section(energy, blo, bhi, 1e-10);
}

}  // namespace pldual
