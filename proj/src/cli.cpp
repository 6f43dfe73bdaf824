#include "pldual/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <ostream>
#include <string>
#include <vector>

#include "pldual/core_model.hpp"
#include "pldual/errors.hpp"
#include "pldual/gamma_kit.hpp"
#include "pldual/kernels.hpp"
#include "pldual/limits.hpp"
#include "pldual/report.hpp"
#include "pldual/spectral.hpp"
#include "pldual/variational.hpp"
#include "pldual/verify.hpp"

namespace pldual {
namespace {

constexpr std::size_t kMaxRows = 100000;

struct Globals {
  std::string format = "csv";
  std::string units = "atomic";
  std::string kernels = "auto";
};

std::string num(double v) { return format_real(v); }

double rel_err(double a, double b) { return std::abs(a - b) / std::abs(b); }

CheckOutcome at_most(std::string name, double measured, double tol) {
  return {std::move(name), measured, tol, measured <= tol};
}

// "a..b" or "2^a..2^b"
std::vector<long> parse_range(const std::string& text) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) fail(ErrorKind::usage, "range must look like a..b or 2^a..2^b");
  std::string lo = text.substr(0, dots), hi = text.substr(dots + 2);
  const bool pow2 = lo.rfind("2^", 0) == 0;
  if (pow2 != (hi.rfind("2^", 0) == 0))
    fail(ErrorKind::usage, "range ends must both be plain or both be powers of two");
  if (pow2) {
    lo.erase(0, 2);
    hi.erase(0, 2);
  }
  long a = 0, b = 0;
  try {
    std::size_t ua = 0, ub = 0;
    a = std::stol(lo, &ua);
    b = std::stol(hi, &ub);
    if (ua != lo.size() || ub != hi.size()) throw std::invalid_argument("trailing");
  } catch (const std::exception&) {
    fail(ErrorKind::usage, "range '" + text + "' is not made of integers");
  }
  if (b < a) fail(ErrorKind::usage, "range end is below its start");
  if (pow2) {
    if (a < 0 || b > 40) fail(ErrorKind::usage, "power-of-two range exponents must lie in [0, 40]");
    return powers_of_two(static_cast<int>(a), static_cast<int>(b));
  }
  if (static_cast<std::size_t>(b - a) >= kMaxRows) fail(ErrorKind::usage, "range has too many entries");
  std::vector<long> out;
  for (long i = a; i <= b; ++i) out.push_back(i);
  return out;
}

void emit(const RunReport& report, const Globals& g, std::ostream& out, std::ostream& err) {
  if (g.format == "json")
    write_json(out, report);
  else
    write_csv(out, report);
  write_metadata(err, report);
}

int exit_code(const RunReport& r) { return r.all_passed() ? 0 : 1; }

// ---- map

struct MapArgs {
  double d = 3, l = 0, beta = -1, K = -1, E = -0.5;
};

RunReport cmd_map(const MapArgs& a) {
  RunReport r;
  r.command = "map";
  r.parameters = {{"d", num(a.d)}, {"l", num(a.l)}, {"beta", num(a.beta)}, {"K", num(a.K)}, {"E", num(a.E)}};
  const RadialProblem prob{a.d, a.l, PowerLawPotential{a.K, a.beta}, PhysicalConstants::atomic()};
  const DualityOutput dual = dual_problem(prob, a.E);
  r.columns = {"d", "l", "beta", "K", "E", "D", "L", "dual_energy", "dual_coupling",
               "dual_exponent", "coord_exponent", "physical"};
  r.add_row({a.d, a.l, a.beta, a.K, a.E, dual.dual_dim, dual.dual_ang_momentum, dual.dual_energy,
             dual.dual_potential.coupling, dual.dual_potential.exponent, dual.coord_exponent,
             dual.is_physical()});
  return r;
}

// ---- ratio

struct RatioArgs {
  std::string system = "hydrogen";
  std::vector<long> n;
  std::string range;
  int l = -1;
  int k = 1;
  int d = 3;
};

RunReport cmd_ratio(const RatioArgs& a) {
  constexpr double pi = std::numbers::pi;
  RunReport r;
  r.command = "ratio";
  r.parameters = {{"system", a.system}};

  std::vector<long> idx;
  if (!a.n.empty() && !a.range.empty()) fail(ErrorKind::usage, "give either --n or --range, not both");
  if (!a.n.empty()) {
    idx = a.n;
  } else if (!a.range.empty()) {
    idx = parse_range(a.range);
    r.parameters.push_back({"range", a.range});
  } else if (a.system == "symmetric" && a.l >= 0) {
    idx = {a.l};
  } else {
    idx = powers_of_two(4, 20);
    r.parameters.push_back({"range", "2^4..2^20"});
  }
  if (idx.size() > kMaxRows) fail(ErrorKind::usage, "too many indices");

  std::function<double(long)> f;
  double limit = 1.0;
  long min_index = 0;
  if (a.system == "hydrogen") {
    if (a.d < 3) fail(ErrorKind::usage, "--d must be >= 3 for the hydrogen ratio");
    r.parameters.push_back({"d", std::to_string(a.d)});
    f = [d = a.d](long l) { return ratio_hydrogen(static_cast<int>(l), d); };
  } else if (a.system == "oscillator") {
    f = [](long L) { return ratio_oscillator(static_cast<int>(L)); };
  } else if (a.system == "main") {
    f = [](long l) { return main_sequence(static_cast<int>(l)); };
  } else if (a.system == "symmetric") {
    r.parameters.push_back({"k", std::to_string(a.k)});
    if (a.k < 0) fail(ErrorKind::usage, "--k must be >= 0");
    f = [k = a.k](long l) { return symmetric_ratio(static_cast<int>(l), k); };
    if (a.k == 0) min_index = 1;
  } else if (a.system == "wallis") {
    f = [](long n) { return wallis_partial(n); };
    limit = pi / 2.0;
  } else {
    fail(ErrorKind::usage, "unknown system '" + a.system + "'");
  }
  const long max_index = a.system == "wallis" ? kMaxProductLength : 1'000'000'000L;
  for (long i : idx)
    if (i < min_index || i > max_index)
      fail(ErrorKind::usage, "index " + std::to_string(i) + " outside the valid range");

  const bool bridge = a.system == "hydrogen" && a.d == 3;
  r.columns = {"index", "value", "limit", "gap_to_limit", "extrapolated_limit"};
  if (a.system == "symmetric") r.columns.insert(r.columns.begin() + 1, "k");
  if (bridge) r.columns.push_back("bridge_rel_error");

  bool analysable = idx.size() >= 4 && idx.front() > 0;
  for (std::size_t i = 1; i < idx.size(); ++i) analysable = analysable && idx[i] > idx[i - 1];
  Cell extrapolated;
  if (analysable) {
    const RatioSequence seq = analyze_sequence(f, idx);
    extrapolated = seq.limit_estimate;
    r.parameters.push_back({"extrapolation", std::string(to_string(seq.extrapolation_method))});
    r.parameters.push_back({"rate_estimate", num(seq.rate_estimate)});
    r.parameters.push_back({"rate_constant", num(seq.rate_constant)});
    for (const std::string& w : seq.warnings) r.parameters.push_back({"warning", w});
  }

  double worst_bridge = 0.0;
  for (long i : idx) {
    const double v = f(i);
    std::vector<Cell> row{i, v, limit, v - limit, extrapolated};
    if (a.system == "symmetric") row.insert(row.begin() + 1, static_cast<long>(a.k));
    if (bridge) {
      const double e = i + 1 <= kMaxProductLength ? rel_err(v, 2.0 / pi * wallis_partial(i + 1))
                                                  : std::nan("");
      if (std::isfinite(e)) worst_bridge = std::max(worst_bridge, e);
      row.push_back(e);
    }
    r.add_row(std::move(row));
  }
  if (bridge) r.checks.push_back(at_most("ratio_hydrogen(n-1) = (2/pi) W_n", worst_bridge, 1e-12));
  return r;
}

// ---- variational

struct VariationalArgs {
  std::string system = "hydrogen";
  std::vector<int> l{0};
  int d = 3;
  double omega = 1.0;
  double rel_tol = 1e-10;
};

RunReport cmd_variational(const VariationalArgs& a) {
  RunReport r;
  r.command = "variational";
  r.parameters = {{"system", a.system}, {"quadrature_rel_tol", num(a.rel_tol)}};
  r.columns = {"index", "dim", "closed_form_min", "quadrature_min", "min_rel_discrepancy",
               "scale_closed_form", "scale_numeric", "scale_rel_discrepancy", "exact_ground",
               "ratio"};
  double worst_e = 0.0, worst_a = 0.0;
  for (int l : a.l) {
    if (l < 0) fail(ErrorKind::usage, "angular momentum must be >= 0");
    if (a.system == "hydrogen") {
      if (a.d < 3) fail(ErrorKind::usage, "--d must be >= 3 for the Gaussian hydrogen trial");
      const VariationalResult v = hydrogen_variational_min(l, a.d);
      const double a_star = hydrogen_alpha_star(l, a.d);
      const double quad = quadrature_mean_energy(TrialFunction{a_star, 2.0, double(l)},
                                                 RadialProblem::hydrogen(a.d, l), a.rel_tol);
      const double de = rel_err(quad, v.min_mean_energy), da = rel_err(v.optimal_scale, a_star);
      worst_e = std::max(worst_e, de);
      worst_a = std::max(worst_a, da);
      r.add_row({long(l), long(a.d), v.min_mean_energy, quad, de, a_star, v.optimal_scale, da,
                 v.exact_ground_energy, v.ratio});
    } else if (a.system == "oscillator") {
      const double K = 0.5 * a.omega * a.omega;
      const VariationalResult v = oscillator_variational_min(l, a.omega);
      const double a_star = oscillator_alpha_star(l, K);
      const double a_num = oscillator_alpha_numeric(l, K).x;
      const double quad = quadrature_mean_energy(TrialFunction{a_star, 4.0, double(l)},
                                                 RadialProblem::oscillator(4, l, a.omega), a.rel_tol);
      const double de = rel_err(quad, v.min_mean_energy), da = rel_err(a_num, a_star);
      worst_e = std::max(worst_e, de);
      worst_a = std::max(worst_a, da);
      r.add_row({long(l), 4L, v.min_mean_energy, quad, de, a_star, a_num, da,
                 v.exact_ground_energy, v.ratio});
    } else {
      fail(ErrorKind::usage, "unknown system '" + a.system + "'");
    }
  }
  if (a.system == "hydrogen") r.parameters.push_back({"d", std::to_string(a.d)});
  else r.parameters.push_back({"omega", num(a.omega)});
  r.checks.push_back(at_most("closed form vs quadrature minimum", worst_e, 1e-8));
  r.checks.push_back(at_most("numeric minimiser vs closed-form scale", worst_a, 1e-6));
  return r;
}

// ---- spectrum

struct SpectrumArgs {
  std::string system = "hydrogen";
  int l = 0;
  int d = -1;
  int levels = 4;
  double omega = 1.0;
  int points = 0;
};

RunReport cmd_spectrum(const SpectrumArgs& a) {
  RunReport r;
  r.command = "spectrum";
  r.parameters = {{"system", a.system}, {"l", std::to_string(a.l)}, {"levels", std::to_string(a.levels)}};
  if (a.l < 0) fail(ErrorKind::usage, "angular momentum must be >= 0");
  if (a.levels < 1 || a.levels > 50) fail(ErrorKind::usage, "--levels must lie in [1, 50]");

  if (a.system == "dual") {
    const DualSpectrumReport rep = verify_dual_spectrum(a.l, a.levels - 1);
    r.columns = {"N", "hydrogen_energy", "hydrogen_exact", "omega", "oscillator_energy",
                 "expected", "rel_error", "passed"};
    for (const DualLevel& lv : rep.levels) {
      r.add_row({long(lv.N), lv.hydrogen_energy, lv.hydrogen_exact, lv.omega, lv.oscillator_energy,
                 lv.expected, lv.rel_error, lv.passed});
      r.checks.push_back(at_most("dual level N = " + std::to_string(lv.N), lv.rel_error, rep.tolerance));
    }
    return r;
  }

  RadialProblem prob;
  if (a.system == "hydrogen") {
    const int d = a.d < 0 ? 3 : a.d;
    if (d < 2) fail(ErrorKind::usage, "--d must be >= 2");
    prob = RadialProblem::hydrogen(d, a.l);
  } else if (a.system == "oscillator") {
    prob = RadialProblem::oscillator(a.d < 0 ? 4 : a.d, a.l, a.omega);
    r.parameters.push_back({"omega", num(a.omega)});
  } else {
    fail(ErrorKind::usage, "unknown system '" + a.system + "'");
  }
  const int d = static_cast<int>(prob.spatial_dim);
  r.parameters.push_back({"d", std::to_string(d)});

  SolverConfig cfg = SolverConfig::for_problem(prob, a.levels);
  if (a.points > 0) {
    cfg.num_points = a.points;
    cfg.r_min = cfg.r_max / cfg.num_points;
  }
  const std::vector<RadialState> states = solve_radial(prob, cfg);

  const bool hydrogen = a.system == "hydrogen";
  r.columns = {"N", "energy", "exact", "rel_error", "nodes"};
  if (hydrogen) r.columns.push_back("duality_residual");
  double worst = 0.0, worst_res = 0.0;
  int bad_nodes = 0;
  for (const RadialState& s : states) {
    const int N = s.radial_quantum_number.value_or(-1);
    const double exact = hydrogen ? hydrogen_exact_energy(N, a.l, d)
                                  : a.omega * prob.constants.hbar * (2.0 * N + a.l + 0.5 * d);
    const double e = rel_err(s.energy, exact);
    const int nodes = s.count_nodes();
    worst = std::max(worst, e);
    if (nodes != N) ++bad_nodes;
    std::vector<Cell> row{long(N), s.energy, exact, e, long(nodes)};
    if (hydrogen) {
      const double res = duality_residual(s, prob).residual;
      worst_res = std::max(worst_res, res);
      row.push_back(res);
    }
    r.add_row(std::move(row));
  }
  r.checks.push_back(at_most("eigenvalue relative error", worst, 1e-6));
  r.checks.push_back(at_most("levels whose node count differs from N", bad_nodes, 0.0));
  if (hydrogen) r.checks.push_back(at_most("mapped state residual in the dual problem", worst_res, 1e-5));
  return r;
}

// ---- verify

RunReport cmd_verify(const std::string& suite) {
  RunReport r;
  r.command = "verify";
  r.parameters = {{"suite", suite}};
  r.checks = run_suite(parse_suite(suite));
  r.columns = {"check", "measured", "tolerance", "passed"};
  for (const CheckOutcome& c : r.checks) r.add_row({c.name, c.measured, c.tolerance, c.passed});
  return r;
}

void select_kernels(const std::string& name) {
  using kernels::Isa;
  if (name == "scalar") kernels::force(Isa::scalar);
  else if (name == "avx2") kernels::force(Isa::avx2);
  else kernels::force(kernels::supported(Isa::avx2) ? Isa::avx2 : Isa::scalar);
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Power-law duality of the radial Schrodinger equation: maps, ratios, spectra.",
               "pldual"};
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--units", g.units, "Unit label written to the metadata (values are never rescaled)");
  app.add_option("--kernels", g.kernels, "Kernel variant")
      ->check(CLI::IsMember({"auto", "scalar", "avx2"}));

  MapArgs ma;
  auto* map = app.add_subcommand("map", "Apply the duality dictionary to a power-law problem");
  map->add_option("--d", ma.d, "Spatial dimension");
  map->add_option("--l", ma.l, "Angular momentum");
  map->add_option("--beta", ma.beta, "Potential exponent");
  map->add_option("--K", ma.K, "Potential coupling");
  map->add_option("--E", ma.E, "Energy");

  RatioArgs ra;
  auto* ratio = app.add_subcommand("ratio", "Tabulate a ratio sequence and its limit");
  ratio->add_option("--system", ra.system)
      ->check(CLI::IsMember({"hydrogen", "oscillator", "symmetric", "wallis", "main"}));
  ratio->add_option("--n", ra.n, "Comma-separated indices")->delimiter(',');
  ratio->add_option("--range", ra.range, "a..b or 2^a..2^b");
  ratio->add_option("--l", ra.l, "l for the symmetric ratio");
  ratio->add_option("--k", ra.k, "k for the symmetric ratio");
  ratio->add_option("--d", ra.d, "Dimension for the hydrogen ratio");

  VariationalArgs va;
  auto* var = app.add_subcommand("variational", "Closed-form vs quadrature variational minimum");
  var->add_option("--system", va.system)->check(CLI::IsMember({"hydrogen", "oscillator"}));
  auto* vl = var->add_option("--l", va.l, "Angular momenta (comma-separated)")->delimiter(',');
  var->add_option("--L", va.l, "Alias of --l for the oscillator")->delimiter(',')->excludes(vl);
  var->add_option("--d", va.d, "Hydrogen dimension");
  var->add_option("--omega", va.omega, "Oscillator frequency");
  var->add_option("--precision", va.rel_tol, "Quadrature relative tolerance");

  SpectrumArgs sa;
  auto* spec = app.add_subcommand("spectrum", "Finite-difference bound states");
  spec->add_option("--system", sa.system)->check(CLI::IsMember({"hydrogen", "oscillator", "dual"}));
  auto* sl = spec->add_option("--l", sa.l, "Angular momentum");
  spec->add_option("--L", sa.l, "Alias of --l")->excludes(sl);
  spec->add_option("--d", sa.d, "Dimension (default 3 for hydrogen, 4 for the oscillator)");
  spec->add_option("--levels", sa.levels, "Number of levels");
  spec->add_option("--omega", sa.omega, "Oscillator frequency");
  spec->add_option("--points", sa.points, "Grid points (default chosen per problem)");

  std::string suite = "all";
  auto* ver = app.add_subcommand("verify", "Run a verification suite");
  ver->add_option("--suite", suite)
      ->check(CLI::IsMember({"identities", "variational", "spectra", "duality", "all"}));

  for (auto* s : {map, ratio, var, spec, ver}) s->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    select_kernels(g.kernels);
    RunReport r;
    if (*map) r = cmd_map(ma);
    else if (*ratio) r = cmd_ratio(ra);
    else if (*var) r = cmd_variational(va);
    else if (*spec) r = cmd_spectrum(sa);
    else r = cmd_verify(suite);
    r.timestamp = utc_timestamp();
    r.parameters.push_back({"units", g.units});
    r.parameters.push_back({"kernels", std::string(kernels::to_string(kernels::active().isa))});
    emit(r, g, out, err);
    return exit_code(r);
  } catch (const Error& e) {
    err << "error (" << to_string(e.kind()) << "): " << e.what() << "\n";
    return 2;
  }
}

}  // namespace pldual
