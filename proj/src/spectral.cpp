#include "pldual/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <string>

#include "pldual/errors.hpp"
#include "pldual/kernels.hpp"

namespace pldual {
namespace {

constexpr double kHydrogenSpacing = 0.004;    // in Bohr radii; finer grids hit rounding
constexpr double kOscillatorSpacing = 0.002;  // in oscillator lengths
constexpr double kTailDecay = 1e-8;

bool is_coulomb_like(const RadialProblem& p) {
  return p.potential.exponent == -1.0 && p.potential.coupling < 0.0;
}

bool is_oscillator(const RadialProblem& p) {
  return p.potential.exponent == 2.0 && p.potential.coupling > 0.0;
}

struct Tridiagonal {
  std::vector<double> diag;
  std::vector<double> off;  // constant, but kept per entry for the solver
  std::vector<double> off_sq;
  std::vector<double> r;
  double h = 0.0;
  double norm_bound = 0.0;  // Gershgorin radius
  double lower = 0.0;
  double upper = 0.0;
};

Tridiagonal build_matrix(const RadialProblem& prob, double r_min, double h, std::size_t n) {
  const double kin = prob.constants.kinetic_scale();
  const double le = prob.angular_momentum + 0.5 * (prob.spatial_dim - 3.0);
  const double centrifugal = kin * le * (le + 1.0);
  const double t = kin / (h * h);

  Tridiagonal m;
  m.h = h;
  m.r.resize(n);
  m.diag.resize(n);
  m.off.assign(n - 1, -t);
  m.off_sq.assign(n - 1, t * t);
  m.lower = std::numeric_limits<double>::infinity();
  m.upper = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < n; ++i) {
    const double r = r_min + h * static_cast<double>(i);
    m.r[i] = r;
    m.diag[i] = 2.0 * t + centrifugal / (r * r) + prob.potential(r);
    const double radius = (i == 0 || i + 1 == n) ? t : 2.0 * t;
    m.lower = std::min(m.lower, m.diag[i] - radius);
    m.upper = std::max(m.upper, m.diag[i] + radius);
  }
  m.norm_bound = std::max(std::abs(m.lower), std::abs(m.upper));
  return m;
}

// Lowest `levels` eigenvalues by simultaneous bisection; all active
// midpoints of one sweep go through the Sturm kernel together.
std::vector<double> lowest_eigenvalues(const Tridiagonal& m, int levels, double rel_tol) {
  const kernels::KernelTable& k = kernels::active();
  const double pivmin = std::numeric_limits<double>::min() * std::max(1.0, m.off_sq.front());

  const auto L = static_cast<std::size_t>(levels);
  std::vector<double> lo(L, m.lower);
  std::vector<double> hi(L, m.upper);
  std::vector<double> shifts;
  std::vector<int> counts;
  std::vector<std::size_t> active;
  for (int sweep = 0; sweep < 400; ++sweep) {
    active.clear();
    shifts.clear();
    for (std::size_t j = 0; j < L; ++j) {
      const double width = hi[j] - lo[j];
      const double tol = rel_tol * std::max(std::abs(lo[j]), std::abs(hi[j]));
      const double mid = 0.5 * (lo[j] + hi[j]);
      if (width > tol && mid > lo[j] && mid < hi[j]) {
        active.push_back(j);
        shifts.push_back(mid);
      }
    }
    if (active.empty()) break;
    counts.resize(shifts.size());
    k.sturm_counts(m.diag, m.off_sq, pivmin, shifts, counts);
    for (std::size_t a = 0; a < active.size(); ++a) {
      const double mid = shifts[a];
      const auto below = static_cast<std::size_t>(counts[a]);
      // Share the information with every level the count brackets.
      for (std::size_t q = 0; q < L; ++q) {
        if (below > q) hi[q] = std::min(hi[q], mid);
        else lo[q] = std::max(lo[q], mid);
      }
    }
  }
  std::vector<double> out(L);
  for (std::size_t j = 0; j < L; ++j) out[j] = 0.5 * (lo[j] + hi[j]);
  return out;
}

// Solves (T - shift) x = b with partial pivoting (LAPACK gttrf/gttrs style);
// b is overwritten by x.
void shifted_solve(const Tridiagonal& m, double shift, std::vector<double>& b) {
  const std::size_t n = m.diag.size();
  std::vector<double> dl(m.off.begin(), m.off.end());
  std::vector<double> d(n);
  std::vector<double> du(m.off.begin(), m.off.end());
  std::vector<double> du2(n > 2 ? n - 2 : 0, 0.0);
  std::vector<char> swapped(n, 0);
  for (std::size_t i = 0; i < n; ++i) d[i] = m.diag[i] - shift;
  const double tiny = std::numeric_limits<double>::epsilon() * m.norm_bound;

  for (std::size_t i = 0; i + 1 < n; ++i) {
    if (std::abs(d[i]) >= std::abs(dl[i])) {
      if (d[i] == 0.0) d[i] = tiny;
      const double f = dl[i] / d[i];
      dl[i] = f;
      d[i + 1] -= f * du[i];
      if (i + 2 < n) du2[i] = 0.0;
    } else {
      const double f = d[i] / dl[i];
      d[i] = dl[i];
      dl[i] = f;
      const double tmp = du[i];
      du[i] = d[i + 1];
      d[i + 1] = tmp - f * d[i + 1];
      if (i + 2 < n) {
        du2[i] = du[i + 1];
        du[i + 1] = -f * du[i + 1];
      }
      swapped[i] = 1;
    }
  }
  if (d[n - 1] == 0.0) d[n - 1] = tiny;

  for (std::size_t i = 0; i + 1 < n; ++i) {
    if (swapped[i]) {
      const double tmp = b[i];
      b[i] = b[i + 1];
      b[i + 1] = tmp - dl[i] * b[i];
    } else {
      b[i + 1] -= dl[i] * b[i];
    }
  }
  b[n - 1] /= d[n - 1];
  if (n > 1) b[n - 2] = (b[n - 2] - du[n - 2] * b[n - 1]) / d[n - 2];
  for (std::size_t i = n - 2; i-- > 0;) b[i] = (b[i] - du[i] * b[i + 1] - du2[i] * b[i + 2]) / d[i];
}

std::vector<double> inverse_iteration(const Tridiagonal& m, double eigenvalue) {
  const std::size_t n = m.diag.size();
  const double shift = eigenvalue + 64.0 * std::numeric_limits<double>::epsilon() *
                                        std::max(std::abs(eigenvalue), 1e-3 * m.norm_bound);
  std::vector<double> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = 1.0 + 0.25 * std::sin(0.7 * double(i));
  for (int it = 0; it < 4; ++it) {
    shifted_solve(m, shift, v);
    double s = 0.0;
    for (double x : v) s += x * x;
    const double inv = 1.0 / std::sqrt(s * m.h);
    for (double& x : v) x *= inv;
  }
  double peak = 0.0;
  for (double x : v) peak = std::max(peak, std::abs(x));
  for (double x : v) {
    if (std::abs(x) > 1e-6 * peak) {
      if (x < 0.0)
        for (double& y : v) y = -y;
      break;
    }
  }
  return v;
}

// Fornberg's recursion: weights for derivatives 0..2 at z on nodes x.
void fd_weights(double z, const double* x, std::size_t n, std::vector<double>& c) {
  constexpr std::size_t M = 2;
  c.assign(n * (M + 1), 0.0);
  auto C = [&](std::size_t i, std::size_t k) -> double& { return c[i * (M + 1) + k]; };
  double c1 = 1.0;
  double c4 = x[0] - z;
  C(0, 0) = 1.0;
  for (std::size_t i = 1; i < n; ++i) {
    const std::size_t mn = std::min(i, M);
    double c2 = 1.0;
    const double c5 = c4;
    c4 = x[i] - z;
    for (std::size_t j = 0; j < i; ++j) {
      const double c3 = x[i] - x[j];
      c2 *= c3;
      if (j == i - 1) {
        for (std::size_t k = mn; k > 0; --k)
          C(i, k) = c1 * (double(k) * C(i - 1, k - 1) - c5 * C(i - 1, k)) / c2;
        C(i, 0) = -c1 * c5 * C(i - 1, 0) / c2;
      }
      for (std::size_t k = mn; k > 0; --k) C(j, k) = (c4 * C(j, k) - double(k) * C(j, k - 1)) / c3;
      C(j, 0) = c4 * C(j, 0) / c3;
    }
    c1 = c2;
  }
}

// (H - E) R at interior rows [half, n - half) using `width`-point stencils.
std::vector<double> apply_operator(const std::vector<double>& rho, const std::vector<double>& f,
                                   const RadialProblem& prob, double energy, std::size_t width) {
  const std::size_t n = rho.size();
  const std::size_t half = width / 2;
  const std::size_t rows = n - 2 * half;
  const double kin = prob.constants.kinetic_scale();
  const double D = prob.spatial_dim;
  const double L = prob.angular_momentum;

  std::vector<double> w1(width * rows), w2(width * rows), first(rows), diag(rows);
  std::vector<double> c;
  for (std::size_t i = 0; i < rows; ++i) {
    const std::size_t centre = i + half;
    fd_weights(rho[centre], rho.data() + i, width, c);
    for (std::size_t k = 0; k < width; ++k) {
      w1[k * rows + i] = c[k * 3 + 1];
      w2[k * rows + i] = c[k * 3 + 2];
    }
    const double x = rho[centre];
    first[i] = -kin * (D - 1.0) / x;
    diag[i] = kin * L * (L + D - 2.0) / (x * x) + prob.potential(x) - energy;
  }
  kernels::StencilView view{rows, width, -kin, w1, w2, first, diag};
  std::vector<double> out(rows);
  kernels::active().apply_stencil(view, f, out);
  return out;
}

}  // namespace

void SolverConfig::validate() const {
  if (!(r_min > 0.0) || !(r_max > r_min) || !std::isfinite(r_max))
    fail(ErrorKind::domain, "solver window needs 0 < r_min < r_max");
  if (num_points < 200) fail(ErrorKind::domain, "solver needs at least 200 grid points");
  if (num_levels < 1) fail(ErrorKind::domain, "solver needs at least one level");
  if (!(tolerance > 0.0)) fail(ErrorKind::domain, "solver tolerance must be positive");
}

SolverConfig SolverConfig::for_problem(const RadialProblem& prob, int num_levels) {
  prob.validate();
  if (num_levels < 1) fail(ErrorKind::domain, "solver needs at least one level");
  const PhysicalConstants& c = prob.constants;
  const double le = prob.angular_momentum + 0.5 * (prob.spatial_dim - 3.0);
  double r_max = 0.0;
  double h = 0.0;
  if (is_coulomb_like(prob)) {
    const double a0 = c.hbar * c.hbar / (c.mass * -prob.potential.coupling);
    const double n_top = num_levels + le;  // effective principal number of the top level
    r_max = a0 * n_top * (2.0 * n_top + 30.0);
    h = kHydrogenSpacing * a0;
  } else if (is_oscillator(prob)) {
    const double omega = std::sqrt(2.0 * prob.potential.coupling / c.mass);
    const double b = std::sqrt(c.hbar / (c.mass * omega));
    const double e_top = c.hbar * omega * (2.0 * (num_levels - 1) + le + 1.5);
    const double turning = std::sqrt(2.0 * e_top / (c.mass * omega * omega));
    r_max = turning + 8.0 * b;
    h = kOscillatorSpacing * b;
  } else {
    fail(ErrorKind::domain, "no default window for this potential; pass a SolverConfig");
  }
  SolverConfig cfg;
  cfg.num_points = std::max(200, static_cast<int>(std::ceil(r_max / h)));
  cfg.r_max = r_max;
  cfg.r_min = r_max / cfg.num_points;
  cfg.num_levels = num_levels;
  return cfg;
}

std::vector<RadialState> solve_radial(const RadialProblem& prob, const SolverConfig& cfg) {
  prob.validate();
  cfg.validate();
  const double h = cfg.spacing();
  const auto n = static_cast<std::size_t>(cfg.num_points);
  const bool origin_boundary = std::abs(cfg.r_min - h) <= 1e-9 * h;
  const bool extrapolate = cfg.richardson && origin_boundary;

  const Tridiagonal coarse = build_matrix(prob, cfg.r_min, h, n);
  std::vector<double> energies = lowest_eigenvalues(coarse, cfg.num_levels, cfg.tolerance);
  std::vector<double> raw = energies;

  Tridiagonal fine;
  if (extrapolate) {
    fine = build_matrix(prob, 0.5 * h, 0.5 * h, 2 * n);
    raw = lowest_eigenvalues(fine, cfg.num_levels, cfg.tolerance);
    for (std::size_t j = 0; j < energies.size(); ++j) {
      const double e_h = energies[j];
      const double e_h2 = raw[j];
      if (std::abs(e_h - e_h2) > 1e-3 * std::abs(e_h2)) {
        std::ostringstream msg;
        msg << "level " << j << " is not resolved: E(h) = " << e_h << ", E(h/2) = " << e_h2;
        fail(ErrorKind::window_too_small, msg.str());
      }
      energies[j] = (4.0 * e_h2 - e_h) / 3.0;
    }
  }
  const Tridiagonal& grid = extrapolate ? fine : coarse;

  if (prob.potential.exponent < 0.0 && prob.potential.coupling < 0.0) {
    for (std::size_t j = 0; j < raw.size(); ++j)
      if (!(raw[j] < 0.0))
        fail(ErrorKind::window_too_small,
             "level " + std::to_string(j) + " is not bound inside the window");
  }

  const double half_dim = 0.5 * (prob.spatial_dim - 1.0);
  std::vector<RadialState> states;
  states.reserve(energies.size());
  for (std::size_t j = 0; j < energies.size(); ++j) {
    const std::vector<double> u = inverse_iteration(grid, raw[j]);
    RadialState s;
    s.grid = grid.r;
    s.values.resize(u.size());
    for (std::size_t i = 0; i < u.size(); ++i) s.values[i] = u[i] * std::pow(grid.r[i], -half_dim);
    s.energy = energies[j];
    s.radial_quantum_number = static_cast<int>(j);

    double peak = 0.0;
    for (double v : s.values) peak = std::max(peak, std::abs(v));
    if (std::abs(s.values.back()) > kTailDecay * peak) {
      std::ostringstream msg;
      msg << "level " << j << " has not decayed at r_max = " << cfg.r_max << " (|R| ratio "
          << std::abs(s.values.back()) / peak << ")";
      fail(ErrorKind::window_too_small, msg.str());
    }
    states.push_back(std::move(s));
  }
  return states;
}

ResidualReport operator_residual(const RadialState& state, const RadialProblem& prob,
                                 double energy, const ResidualOptions& opts) {
  state.validate();
  prob.validate();
  if (opts.stencil_width < 3 || opts.stencil_width % 2 == 0)
    fail(ErrorKind::domain, "stencil width must be odd and >= 3");
  const auto width = static_cast<std::size_t>(opts.stencil_width);
  const std::size_t wide = width + 2;
  const std::size_t n = state.grid.size();
  if (n < wide + 2) fail(ErrorKind::grid_too_coarse, "state has too few samples for the stencil");

  double peak = 0.0;
  for (double v : state.values) peak = std::max(peak, std::abs(v));
  if (!(peak > 0.0)) fail(ErrorKind::domain, "state is identically zero; not a bound state");
  if (energy == 0.0) fail(ErrorKind::domain, "residual is normalised by E R and needs E != 0");

  if (!(opts.min_spacing >= 0.0) || !(opts.min_spacing < 0.5))
    fail(ErrorKind::domain, "min_spacing must lie in [0, 0.5)");

  std::vector<double> grid, values;
  const double gap = opts.min_spacing * (state.grid.back() - state.grid.front());
  grid.push_back(state.grid.front());
  values.push_back(state.values.front());
  for (std::size_t i = 1; i < n; ++i) {
    if (state.grid[i] - grid.back() < gap && i + 1 < n) continue;
    grid.push_back(state.grid[i]);
    values.push_back(state.values[i]);
  }
  if (grid.size() < wide + 2) fail(ErrorKind::grid_too_coarse, "state has too few samples for the stencil");

  const std::vector<double> res = apply_operator(grid, values, prob, energy, width);
  const std::vector<double> res_wide = apply_operator(grid, values, prob, energy, wide);

  const double D = prob.spatial_dim;
  auto measure = [&](std::size_t i) {
    return std::pow(grid[i], D - 1.0) * 0.5 * (grid[i + 1] - grid[i - 1]);
  };

  const std::size_t half = width / 2;
  double num = 0.0, den = 0.0;
  for (std::size_t r = 0; r < res.size(); ++r) {
    const std::size_t i = r + half;
    const double w = measure(i);
    num += w * res[r] * res[r];
    const double er = energy * values[i];
    den += w * er * er;
  }

  // Rows of the wide stencil are a subset of the narrow ones shifted by one.
  double diff = 0.0, den_common = 0.0;
  for (std::size_t r = 0; r < res_wide.size(); ++r) {
    const std::size_t i = r + half + 1;
    const double w = measure(i);
    const double delta = res[r + 1] - res_wide[r];
    diff += w * delta * delta;
    const double er = energy * values[i];
    den_common += w * er * er;
  }

  ResidualReport out;
  out.residual = std::sqrt(num / den);
  out.truncation_estimate = std::sqrt(diff / den_common);
  out.points = res.size();
  if (out.truncation_estimate > opts.max_truncation) {
    std::ostringstream msg;
    msg << "differencing error estimate " << out.truncation_estimate << " exceeds "
        << opts.max_truncation << "; refine the grid";
    fail(ErrorKind::grid_too_coarse, msg.str());
  }
  return out;
}

ResidualReport duality_residual(const RadialState& state, const RadialProblem& source,
                                const ResidualOptions& opts) {
  const DualityOutput dual = dual_problem(source, state.energy);
  const RadialState mapped = map_state(state, source.potential.exponent);
  return operator_residual(mapped, dual.as_problem(source.constants), dual.dual_energy, opts);
}

bool DualSpectrumReport::all_passed() const {
  return !levels.empty() &&
         std::all_of(levels.begin(), levels.end(), [](const DualLevel& l) { return l.passed; });
}

DualSpectrumReport verify_dual_spectrum(int l, int N_max, const PhysicalConstants& c,
                                        double tolerance) {
  if (l < 0 || N_max < 0) fail(ErrorKind::domain, "l and N_max must be >= 0");
  const RadialProblem hydrogen = RadialProblem::hydrogen(3, l, c);
  const std::vector<RadialState> h_states =
      solve_radial(hydrogen, SolverConfig::for_problem(hydrogen, N_max + 1));

  DualSpectrumReport report;
  report.l = l;
  report.tolerance = tolerance;
  for (int N = 0; N <= N_max; ++N) {
    DualLevel level;
    level.N = N;
    level.hydrogen_energy = h_states[static_cast<std::size_t>(N)].energy;
    const double n_eff = N + l + 1.0;
    level.hydrogen_exact = -0.5 * c.hartree() / (n_eff * n_eff);
    level.omega = std::sqrt(-8.0 * level.hydrogen_energy / c.mass);
    const RadialProblem osc = RadialProblem::oscillator(4, 2 * l, level.omega, c);
    const std::vector<RadialState> o_states =
        solve_radial(osc, SolverConfig::for_problem(osc, N + 1));
    level.oscillator_energy = o_states.back().energy;
    level.expected = 4.0 * c.charge_sq;
    level.rel_error = std::abs(level.oscillator_energy - level.expected) / level.expected;
    level.passed = level.rel_error <= tolerance;
    report.levels.push_back(level);
  }
  return report;
}

}  // namespace pldual
