#include "pldual/verify.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "pldual/errors.hpp"
#include "pldual/gamma_kit.hpp"
#include "pldual/limits.hpp"
#include "pldual/spectral.hpp"
#include "pldual/variational.hpp"

namespace pldual {
namespace {

double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

CheckOutcome at_most(std::string name, double measured, double tol) {
  return {std::move(name), measured, tol, measured <= tol};
}

void identities(std::vector<CheckOutcome>& out) {
  constexpr double pi = std::numbers::pi;

  double worst = 0.0;
  for (double n = 0.5; n <= 1e5; n *= 1.37) worst = std::max(worst, duplication_check(n));
  out.push_back(at_most("duplication formula, n in [0.5, 1e5]", worst, 1e-12));

  worst = 0.0;
  for (long n : {1L, 2L, 10L, 100L, 1000L, 10000L}) {
    worst = std::max(worst, rel(product_minus(n), std::sqrt(pi) * gamma_ratio(n + 1.0, n + 0.5)));
    worst = std::max(worst, rel(product_plus(n), 0.5 * std::sqrt(pi) * gamma_ratio(n + 1.0, n + 1.5)));
  }
  out.push_back(at_most("product forms vs Gamma ratios", worst, 1e-12));

  worst = 0.0;
  for (long n = 1; n <= 10000; ++n)
    worst = std::max(worst, rel(ratio_hydrogen(static_cast<int>(n - 1), 3), 2.0 / pi * wallis_partial(n)));
  out.push_back(at_most("finite-n bridge ratio_hydrogen(n-1) = (2/pi) W_n, n <= 1e4", worst, 1e-12));

  const long big = 100000;
  const double scaled_gap = big * (pi / 2.0 - wallis_partial(big)) / (pi / 8.0);
  out.push_back(at_most("Wallis gap n (pi/2 - W_n) / (pi/8) at n = 1e5, distance from 1",
                        std::abs(scaled_gap - 1.0), 0.01));

  worst = 0.0;
  for (int l = 0; l <= 10000; l += 7) {
    const double m = main_sequence(l);
    worst = std::max(worst, std::abs(m * m * ratio_hydrogen(l, 3) - 1.0));
  }
  out.push_back(at_most("main_sequence^2 * ratio_hydrogen = 1", worst, 1e-12));

  worst = 0.0;
  for (int l = 0; l <= 200; ++l) worst = std::max(worst, rel(symmetric_ratio(l, 1), main_sequence(l)));
  out.push_back(at_most("symmetric_ratio(l, 1) = main_sequence(l)", worst, 1e-15));

  const std::vector<long> idx = powers_of_two(4, 20);
  auto limit_gap = [&](auto f, double target) {
    return std::abs(analyze_sequence(f, idx).limit_estimate - target);
  };
  out.push_back(at_most("extrapolated limit of ratio_hydrogen",
                        limit_gap([](long l) { return ratio_hydrogen(static_cast<int>(l), 3); }, 1.0), 1e-8));
  out.push_back(at_most("extrapolated limit of ratio_oscillator",
                        limit_gap([](long L) { return ratio_oscillator(static_cast<int>(L)); }, 1.0), 1e-8));
  out.push_back(at_most("extrapolated limit of main_sequence",
                        limit_gap([](long l) { return main_sequence(static_cast<int>(l)); }, 1.0), 1e-8));
  out.push_back(at_most("extrapolated limit of wallis_partial",
                        limit_gap([](long n) { return wallis_partial(n); }, pi / 2.0), 1e-8));

  int violations = 0;
  for (int l = 0; l < 2000; ++l) {
    const double a = ratio_hydrogen(l, 3), b = ratio_hydrogen(l + 1, 3);
    const double c = ratio_oscillator(l), d = ratio_oscillator(l + 1);
    if (!(a > 0.0 && a < 1.0 && b > a)) ++violations;
    if (!(c >= 1.0 && d < c)) ++violations;
  }
  out.push_back(at_most("variational bound monotonicity violations", violations, 0.0));
}

void variational(std::vector<CheckOutcome>& out) {
  double worst = 0.0;
  for (int l = 0; l <= 20; ++l) {
    for (int d : {3, 4}) {
      const VariationalResult r = hydrogen_variational_min(l, d);
      worst = std::max(worst, rel(r.numeric_min_energy, r.min_mean_energy));
    }
  }
  out.push_back(at_most("hydrogen closed form vs quadrature minimum, l <= 20, d = 3, 4", worst, 1e-8));

  worst = 0.0;
  double worst_alpha = 0.0;
  for (int L = 0; L <= 20; ++L) {
    const VariationalResult r = oscillator_variational_min(L, 1.0);
    const RadialProblem osc = RadialProblem::oscillator(4, L, 1.0);
    const double quad = quadrature_mean_energy(TrialFunction{r.optimal_scale, 4.0, double(L)}, osc);
    worst = std::max(worst, rel(quad, r.min_mean_energy));
    const double K = 0.5;
    worst_alpha = std::max(worst_alpha, rel(oscillator_alpha_numeric(L, K).x, oscillator_alpha_star(L, K)));
  }
  out.push_back(at_most("oscillator closed form vs quadrature, L <= 20", worst, 1e-8));
  out.push_back(at_most("oscillator numeric minimiser vs a*", worst_alpha, 1e-6));
}

void spectra(std::vector<CheckOutcome>& out) {
  double worst_h = 0.0, worst_o = 0.0;
  for (int l = 0; l <= 4; ++l) {
    const RadialProblem h = RadialProblem::hydrogen(3, l);
    const auto hs = solve_radial(h, SolverConfig::for_problem(h, 4));
    for (int N = 0; N <= 3; ++N)
      worst_h = std::max(worst_h, rel(hs[N].energy, hydrogen_exact_energy(N, l, 3)));
    const RadialProblem o = RadialProblem::oscillator(4, l, 1.0);
    const auto os = solve_radial(o, SolverConfig::for_problem(o, 4));
    for (int N = 0; N <= 3; ++N) worst_o = std::max(worst_o, rel(os[N].energy, 2.0 * N + l + 2.0));
  }
  out.push_back(at_most("hydrogen eigenvalues, l <= 4, N <= 3", worst_h, 1e-6));
  out.push_back(at_most("oscillator eigenvalues, L <= 4, N <= 3", worst_o, 1e-6));

  double worst = 0.0;
  for (int l = 0; l <= 2; ++l) {
    const DualSpectrumReport r = verify_dual_spectrum(l, 2);
    for (const DualLevel& lv : r.levels) worst = std::max(worst, lv.rel_error);
  }
  out.push_back(at_most("dual oscillator level n = 2N equals 4 e^2", worst, 1e-5));
}

void duality(std::vector<CheckOutcome>& out) {
  double worst = 0.0;
  for (int l = 0; l <= 4; ++l) {
    const RadialProblem h = RadialProblem::hydrogen(3, l);
    for (const RadialState& s : solve_radial(h, SolverConfig::for_problem(h, 4)))
      worst = std::max(worst, duality_residual(s, h).residual);
  }
  out.push_back(at_most("mapped hydrogen states solve the D = 4 oscillator", worst, 1e-5));

  const RadialProblem h = RadialProblem::hydrogen(3, 0);
  SolverConfig coarse = SolverConfig::for_problem(h, 1);
  SolverConfig fine = coarse;
  coarse.num_points /= 2;
  coarse.r_min = coarse.r_max / coarse.num_points;
  const double r_coarse = duality_residual(solve_radial(h, coarse).front(), h).residual;
  const double r_fine = duality_residual(solve_radial(h, fine).front(), h).residual;
  out.push_back(at_most("residual ratio fine / coarse under refinement", r_fine / r_coarse, 0.5));
}

}  // namespace

Suite parse_suite(std::string_view name) {
  if (name == "identities") return Suite::identities;
  if (name == "variational") return Suite::variational;
  if (name == "spectra") return Suite::spectra;
  if (name == "duality") return Suite::duality;
  if (name == "all") return Suite::all;
  fail(ErrorKind::usage, "unknown suite '" + std::string(name) + "'");
}

std::vector<CheckOutcome> run_suite(Suite suite) {
  std::vector<CheckOutcome> out;
  if (suite == Suite::identities || suite == Suite::all) identities(out);
  if (suite == Suite::variational || suite == Suite::all) variational(out);
  if (suite == Suite::spectra || suite == Suite::all) spectra(out);
  if (suite == Suite::duality || suite == Suite::all) duality(out);
  return out;
}

}  // namespace pldual
