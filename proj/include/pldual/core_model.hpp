#pragma once

// Power-law radial Schrodinger problems and the duality dictionary that maps
// a K r^beta problem in d dimensions onto another power-law problem under
// the substitution r = rho^(2/(beta+2)).

#include <optional>
#include <vector>

namespace pldual {

struct PhysicalConstants {
  double mass = 1.0;
  double hbar = 1.0;
  double charge_sq = 1.0;  // e^2, energy * length

  static PhysicalConstants atomic() { return {}; }

  void validate() const;

  // hbar^2 / (2m), the kinetic prefactor of the radial operator.
  double kinetic_scale() const { return hbar * hbar / (2.0 * mass); }
  // hbar^2 / (m e^2)
  double bohr_radius() const { return hbar * hbar / (mass * charge_sq); }
  // m e^4 / hbar^2
  double hartree() const { return mass * charge_sq * charge_sq / (hbar * hbar); }
};

struct PowerLawPotential {
  double coupling = 0.0;  // K
  double exponent = 0.0;  // beta

  double operator()(double r) const;
};

struct RadialProblem {
  double spatial_dim = 3.0;       // d; real so that dual images stay representable
  double angular_momentum = 0.0;  // l
  PowerLawPotential potential;
  PhysicalConstants constants;

  void validate() const;

  static RadialProblem hydrogen(double d, double l,
                                PhysicalConstants c = PhysicalConstants::atomic());
  // Isotropic oscillator V = m omega^2 r^2 / 2.
  static RadialProblem oscillator(double d, double l, double omega,
                                  PhysicalConstants c = PhysicalConstants::atomic());
};

struct DualityOutput {
  double dual_dim = 0.0;
  double dual_ang_momentum = 0.0;
  double dual_energy = 0.0;
  PowerLawPotential dual_potential;
  double coord_exponent = 0.0;  // sigma = 2/(beta+2), r = rho^sigma

  // Integer D and L: the case where the image is an ordinary problem.
  bool is_physical() const;
  RadialProblem as_problem(const PhysicalConstants& c) const;
};

struct RadialState {
  std::vector<double> grid;
  std::vector<double> values;
  double energy = 0.0;
  std::optional<int> radial_quantum_number;

  // Throws Error(domain) unless the grid is positive, strictly ascending,
  // values are finite and both arrays have the same length >= 3.
  void validate() const;

  // Sign changes among interior samples; samples below rel_floor * max|R|
  // are ignored so tail round-off does not register as a node.
  int count_nodes(double rel_floor = 1e-10) const;
};

double dual_exponent(double beta);

DualityOutput dual_problem(const RadialProblem& prob, double energy);

// rho = r^((beta+2)/2).
double map_coordinate(double r, double beta);
// r = rho^(2/(beta+2)).
double unmap_coordinate(double rho, double beta);

// Pointwise transport R~(rho_i) = R(r_i). The output grid is re-sorted
// ascending (it comes out descending when beta < -2). The energy field is
// carried over unchanged; use the problem overload to get the dual energy.
RadialState map_state(const RadialState& state, double beta);
RadialState map_state(const RadialState& state, const RadialProblem& source);

}  // namespace pldual
