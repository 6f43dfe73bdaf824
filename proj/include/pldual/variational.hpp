#pragma once

#include "pldual/core_model.hpp"
#include "pldual/minimize.hpp"

namespace pldual {

// exp(-scale r^stretch) r^power
struct TrialFunction {
  double scale = 1.0;
  double stretch = 2.0;
  double power = 0.0;

  void validate() const;
  double operator()(double r) const;
};

struct VariationalResult {
  double optimal_scale = 0.0;
  double min_mean_energy = 0.0;      // closed form
  double exact_ground_energy = 0.0;
  double ratio = 0.0;                // min_mean_energy / exact_ground_energy
  double numeric_min_energy = 0.0;   // independent route at optimal_scale
};

// -m e^4 / (2 hbar^2 (N + l + (d-1)/2)^2)
double hydrogen_exact_energy(int N, int l, int d,
                             const PhysicalConstants& c = PhysicalConstants::atomic());

// Gaussian trial on d-dimensional hydrogen. min_mean_energy is the closed
// form (exact ground energy times ratio_hydrogen); optimal_scale and
// numeric_min_energy come from golden-section search over the quadrature
// mean energy.
VariationalResult hydrogen_variational_min(int l, int d = 3,
                                           const PhysicalConstants& c = PhysicalConstants::atomic());

// (m e^2 g)^2 / (2 hbar^4 nu^2), nu = l + d/2, g = Gamma(nu - 1/2) / Gamma(nu):
// the stationary point of the Gaussian-trial energy.
double hydrogen_alpha_star(int l, int d = 3,
                           const PhysicalConstants& c = PhysicalConstants::atomic());

// hbar omega (n + L + 2) in D = 4. With duality_image set, odd n is rejected
// because only n = 2N levels are images of hydrogen states.
double oscillator_exact_energy(int n, int L, double omega,
                               const PhysicalConstants& c = PhysicalConstants::atomic(),
                               bool duality_image = true);

// <H>(a) for rho^L e^{-a rho^4} in the D = 4 oscillator V = K rho^2.
double oscillator_mean_energy(double a, int L, double K,
                              const PhysicalConstants& c = PhysicalConstants::atomic());

// K m / (2 hbar^2 (L + 3))
double oscillator_alpha_star(int L, double K,
                             const PhysicalConstants& c = PhysicalConstants::atomic());

// Golden-section minimiser of oscillator_mean_energy on [a*/10, 10 a*].
MinimizeResult oscillator_alpha_numeric(int L, double K,
                                        const PhysicalConstants& c = PhysicalConstants::atomic());

// K = m omega^2 / 2. numeric_min_energy is oscillator_mean_energy(a*).
VariationalResult oscillator_variational_min(int L, double omega,
                                             const PhysicalConstants& c = PhysicalConstants::atomic());

// int r^(d-1) R^2 dr for the trial in prob.spatial_dim dimensions.
double quadrature_norm(const TrialFunction& trial, double dim, double rel_tol = 1e-10);

// <R|H|R> / <R|R> with the radial operator of prob, by adaptive quadrature.
// H R is formed from the analytic derivatives of the trial family.
double quadrature_mean_energy(const TrialFunction& trial, const RadialProblem& prob,
                              double rel_tol = 1e-10);

// Minimises quadrature_mean_energy over the trial scale (stretch and power
// fixed) inside [lo, hi] after a log-spaced scan.
MinimizeResult minimize_trial_scale(double stretch, double power, const RadialProblem& prob,
                                    double lo, double hi);

}  // namespace pldual
