#pragma once

// Finite-difference radial eigensolver and the residual test that a mapped
// bound state solves the dual problem.

#include <cstddef>
#include <vector>

#include "pldual/core_model.hpp"

namespace pldual {

// Uniform grid r_i = r_min + i h, i < num_points, with Dirichlet conditions
// one spacing beyond each end. When r_min equals the spacing the inner
// boundary sits at the origin and the solver adds a half-spacing grid for
// Richardson extrapolation of the eigenvalues.
struct SolverConfig {
  double r_min = 0.0;
  double r_max = 0.0;
  int num_points = 0;
  int num_levels = 1;
  double tolerance = 1e-14;  // relative bisection width
  bool richardson = true;

  void validate() const;
  double spacing() const { return (r_max - r_min) / (num_points - 1); }

  // Default window for the hydrogen-like (beta = -1, K < 0) and oscillator
  // (beta = 2, K > 0) problems; other potentials need an explicit config.
  static SolverConfig for_problem(const RadialProblem& prob, int num_levels);
};

// Lowest cfg.num_levels bound states, ascending. Each state carries its
// radial quantum number and is normalised to int R^2 r^(d-1) dr = 1 with R
// positive next to the origin.
std::vector<RadialState> solve_radial(const RadialProblem& prob, const SolverConfig& cfg);

struct ResidualOptions {
  int stencil_width = 5;          // local polynomial order + 1
  double max_truncation = 1e-7;   // allowed differencing error estimate
  // Nodes closer than this fraction of the grid extent are skipped before
  // differencing; rounding in the node positions otherwise dominates on
  // dense grids. 0 keeps every node.
  double min_spacing = 3e-4;
};

struct ResidualReport {
  double residual = 0.0;              // ||(H - E) R|| / ||E R||
  double truncation_estimate = 0.0;   // stencil vs wider-stencil disagreement
  std::size_t points = 0;
};

// Residual of sampled R under the radial operator of prob at energy E, on
// interior points, with the D-dimensional measure rho^(D-1) d rho.
ResidualReport operator_residual(const RadialState& state, const RadialProblem& prob,
                                 double energy, const ResidualOptions& opts = {});

// Maps a bound state of `source` through the duality and measures how well
// it solves the dual problem.
ResidualReport duality_residual(const RadialState& state, const RadialProblem& source,
                                const ResidualOptions& opts = {});

struct DualLevel {
  int N = 0;
  double hydrogen_energy = 0.0;   // numerical
  double hydrogen_exact = 0.0;
  double omega = 0.0;             // sqrt(-8 E_N / m)
  double oscillator_energy = 0.0; // numerical level n = 2N, L = 2l
  double expected = 0.0;          // 4 e^2
  double rel_error = 0.0;
  bool passed = false;
};

struct DualSpectrumReport {
  int l = 0;
  double tolerance = 1e-5;
  std::vector<DualLevel> levels;
  bool all_passed() const;
};

DualSpectrumReport verify_dual_spectrum(int l, int N_max,
                                        const PhysicalConstants& c = PhysicalConstants::atomic(),
                                        double tolerance = 1e-5);

}  // namespace pldual
