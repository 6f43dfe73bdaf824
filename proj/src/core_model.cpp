#include "pldual/core_model.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "pldual/errors.hpp"

namespace pldual {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::singular_exponent: return "singular exponent";
    case ErrorKind::domain: return "domain error";
    case ErrorKind::convergence: return "convergence failure";
    case ErrorKind::window_too_small: return "window too small";
    case ErrorKind::grid_too_coarse: return "grid too coarse";
    case ErrorKind::insufficient_points: return "insufficient points";
    case ErrorKind::usage: return "usage error";
  }
  return "error";
}

namespace {

void require_regular(double beta) {
  if (!std::isfinite(beta)) fail(ErrorKind::domain, "potential exponent must be finite");
  if (beta == -2.0)
    fail(ErrorKind::singular_exponent,
         "potential exponent beta = -2 makes the map r = rho^(2/(beta+2)) singular");
}

bool near_integer(double x) {
  return std::abs(x - std::round(x)) <= 1e-12 * std::max(1.0, std::abs(x));
}

}  // namespace

void PhysicalConstants::validate() const {
  if (!(mass > 0.0) || !(hbar > 0.0) || !(charge_sq > 0.0) || !std::isfinite(mass) ||
      !std::isfinite(hbar) || !std::isfinite(charge_sq))
    fail(ErrorKind::domain, "physical constants must be finite and strictly positive");
}

double PowerLawPotential::operator()(double r) const {
  if (exponent == 0.0) return coupling;
  if (exponent == -1.0) return coupling / r;
  if (exponent == 2.0) return coupling * r * r;
  return coupling * std::pow(r, exponent);
}

void RadialProblem::validate() const {
  constants.validate();
  if (!(spatial_dim >= 1.0) || !std::isfinite(spatial_dim))
    fail(ErrorKind::domain, "spatial dimension must be >= 1");
  if (!(angular_momentum >= 0.0) || !std::isfinite(angular_momentum))
    fail(ErrorKind::domain, "angular momentum must be >= 0");
  if (!std::isfinite(potential.coupling) || !std::isfinite(potential.exponent))
    fail(ErrorKind::domain, "potential parameters must be finite");
}

RadialProblem RadialProblem::hydrogen(double d, double l, PhysicalConstants c) {
  return RadialProblem{d, l, PowerLawPotential{-c.charge_sq, -1.0}, c};
}

RadialProblem RadialProblem::oscillator(double d, double l, double omega, PhysicalConstants c) {
  if (!(omega > 0.0)) fail(ErrorKind::domain, "oscillator frequency must be positive");
  return RadialProblem{d, l, PowerLawPotential{0.5 * c.mass * omega * omega, 2.0}, c};
}

bool DualityOutput::is_physical() const {
  return near_integer(dual_dim) && near_integer(dual_ang_momentum) && dual_dim >= 1.0 &&
         dual_ang_momentum >= 0.0;
}

RadialProblem DualityOutput::as_problem(const PhysicalConstants& c) const {
  RadialProblem p{dual_dim, dual_ang_momentum, dual_potential, c};
  p.validate();
  return p;
}

void RadialState::validate() const {
  if (grid.size() != values.size())
    fail(ErrorKind::domain, "state grid and values differ in length");
  if (grid.size() < 3) fail(ErrorKind::domain, "state needs at least 3 samples");
  if (!(grid.front() > 0.0)) fail(ErrorKind::domain, "state grid must be positive");
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (!std::isfinite(grid[i]) || !std::isfinite(values[i]))
      fail(ErrorKind::domain, "state contains non-finite samples");
    if (i > 0 && !(grid[i] > grid[i - 1]))
      fail(ErrorKind::domain, "state grid must be strictly ascending");
  }
}

int RadialState::count_nodes(double rel_floor) const {
  double peak = 0.0;
  for (double v : values) peak = std::max(peak, std::abs(v));
  const double floor = rel_floor * peak;
  int nodes = 0;
  int last_sign = 0;
  for (double v : values) {
    if (std::abs(v) <= floor) continue;
    const int s = v > 0.0 ? 1 : -1;
    if (last_sign != 0 && s != last_sign) ++nodes;
    last_sign = s;
  }
  return nodes;
}

double dual_exponent(double beta) {
  require_regular(beta);
  return -2.0 * beta / (beta + 2.0);
}

DualityOutput dual_problem(const RadialProblem& prob, double energy) {
  prob.validate();
  const double beta = prob.potential.exponent;
  require_regular(beta);
  if (!std::isfinite(energy)) fail(ErrorKind::domain, "energy must be finite");

  const double sigma = 2.0 / (beta + 2.0);
  DualityOutput out;
  out.coord_exponent = sigma;
  out.dual_dim = 2.0 * (beta + prob.spatial_dim) / (beta + 2.0);
  out.dual_ang_momentum = sigma * prob.angular_momentum;
  out.dual_energy = -sigma * sigma * prob.potential.coupling;
  out.dual_potential = PowerLawPotential{-energy * sigma * sigma, dual_exponent(beta)};
  return out;
}

double map_coordinate(double r, double beta) {
  require_regular(beta);
  if (!(r > 0.0) || !std::isfinite(r)) fail(ErrorKind::domain, "radius must be positive");
  if (beta == 0.0) return r;
  if (beta == -1.0) return std::sqrt(r);
  if (beta == 2.0) return r * r;
  return std::pow(r, 0.5 * (beta + 2.0));
}

double unmap_coordinate(double rho, double beta) {
  require_regular(beta);
  if (!(rho > 0.0) || !std::isfinite(rho)) fail(ErrorKind::domain, "radius must be positive");
  if (beta == 0.0) return rho;
  if (beta == -1.0) return rho * rho;
  if (beta == 2.0) return std::sqrt(rho);
  return std::pow(rho, 2.0 / (beta + 2.0));
}

RadialState map_state(const RadialState& state, double beta) {
  require_regular(beta);
  state.validate();
  RadialState out;
  out.energy = state.energy;
  out.radial_quantum_number = state.radial_quantum_number;
  out.grid.reserve(state.grid.size());
  for (double r : state.grid) out.grid.push_back(map_coordinate(r, beta));
  out.values = state.values;
  if (beta < -2.0) {
    std::reverse(out.grid.begin(), out.grid.end());
    std::reverse(out.values.begin(), out.values.end());
  }
  for (std::size_t i = 1; i < out.grid.size(); ++i)
    if (!(out.grid[i] > out.grid[i - 1]))
      fail(ErrorKind::domain, "mapped grid lost strict ordering (exponent too large for grid)");
  return out;
}

RadialState map_state(const RadialState& state, const RadialProblem& source) {
  RadialState out = map_state(state, source.potential.exponent);
  out.energy = dual_problem(source, state.energy).dual_energy;
  return out;
}

}  // namespace pldual
