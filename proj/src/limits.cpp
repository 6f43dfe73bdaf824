#include "pldual/limits.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "pldual/errors.hpp"
#include "pldual/gamma_kit.hpp"

namespace pldual {
namespace {

void require_nonneg(int v, const char* what) {
  if (v < 0) fail(ErrorKind::domain, std::string(what) + " must be >= 0");
}

double symmetric_core(long s) {
  const double x = static_cast<double>(s);
  return std::sqrt(x + 0.5) / x * gamma_ratio(x + 0.5, x);
}

// Solves the (m x m) system a x = b in place, partial pivoting. Returns false
// when the system is numerically singular.
bool solve_dense(std::vector<double>& a, std::vector<double>& b, std::size_t m) {
  for (std::size_t col = 0; col < m; ++col) {
    std::size_t piv = col;
    for (std::size_t r = col + 1; r < m; ++r)
      if (std::abs(a[r * m + col]) > std::abs(a[piv * m + col])) piv = r;
    if (!(std::abs(a[piv * m + col]) > 1e-300)) return false;
    if (piv != col) {
      for (std::size_t c = 0; c < m; ++c) std::swap(a[col * m + c], a[piv * m + c]);
      std::swap(b[col], b[piv]);
    }
    for (std::size_t r = col + 1; r < m; ++r) {
      const double factor = a[r * m + col] / a[col * m + col];
      for (std::size_t c = col; c < m; ++c) a[r * m + c] -= factor * a[col * m + c];
      b[r] -= factor * b[col];
    }
  }
  for (std::size_t r = m; r-- > 0;) {
    double s = b[r];
    for (std::size_t c = r + 1; c < m; ++c) s -= a[r * m + c] * b[c];
    b[r] = s / a[r * m + r];
  }
  return true;
}

// Exact fit of f = L + sum_j c_j (ref/idx)^(q+j) through the last m+1 samples.
bool richardson_limit(std::span<const long> idx, std::span<const double> val, double q,
                      std::size_t corrections, double& limit) {
  const std::size_t m = corrections + 1;
  const std::size_t start = idx.size() - m;
  const double ref = static_cast<double>(idx[start]);
  std::vector<double> a(m * m);
  std::vector<double> b(m);
  for (std::size_t r = 0; r < m; ++r) {
    const double x = ref / static_cast<double>(idx[start + r]);
    a[r * m] = 1.0;
    for (std::size_t j = 0; j < corrections; ++j) a[r * m + 1 + j] = std::pow(x, q + double(j));
    b[r] = val[start + r];
  }
  if (!solve_dense(a, b, m)) return false;
  limit = b[0];
  return std::isfinite(limit);
}

struct RateFit {
  double q = std::numeric_limits<double>::quiet_NaN();
  double c = 0.0;
  bool ok = false;
};

// Least squares of log|f - limit| against log idx over the tail half.
RateFit fit_rate(std::span<const long> idx, std::span<const double> val, double limit) {
  const std::size_t n = idx.size();
  const std::size_t start = n - std::max<std::size_t>(3, n / 2);
  const double floor = 1e3 * std::numeric_limits<double>::epsilon() * std::max(1.0, std::abs(limit));
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  int used = 0;
  for (std::size_t i = start; i < n; ++i) {
    const double gap = std::abs(val[i] - limit);
    if (!(gap > floor)) continue;
    const double x = std::log(static_cast<double>(idx[i]));
    const double y = std::log(gap);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
    ++used;
  }
  RateFit fit;
  if (used < 2) return fit;
  const double denom = used * sxx - sx * sx;
  if (!(std::abs(denom) > 0.0)) return fit;
  const double slope = (used * sxy - sx * sy) / denom;
  fit.q = -slope;
  fit.c = std::exp((sy - slope * sx) / used);
  fit.ok = true;
  return fit;
}

}  // namespace

double ratio_hydrogen(int l, int d) {
  require_nonneg(l, "angular momentum");
  if (d < 3) fail(ErrorKind::domain, "hydrogen ratio is defined for d >= 3");
  const double x = l + 0.5 * (d - 1);
  const double y = l + 0.5 * d;
  const double g = gamma_ratio(x, y);
  return x * x / y * g * g;
}

double ratio_oscillator(int L) {
  require_nonneg(L, "angular momentum");
  const double half = 0.5 * (L + 3);
  return 2.0 * std::sqrt(half) * gamma_ratio(half, 0.5 * L + 1.0) / (L + 2.0);
}

double main_sequence(int l) {
  require_nonneg(l, "angular momentum");
  const double x = l + 1.0;
  return std::sqrt(x + 0.5) / x * gamma_ratio(x + 0.5, x);
}

double symmetric_ratio(int l, int k) {
  if (l < 0 || k < 0 || l + k < 1)
    fail(ErrorKind::domain, "symmetric ratio needs l, k >= 0 and l + k >= 1");
  return symmetric_core(static_cast<long>(l) + static_cast<long>(k));
}

std::string_view to_string(Extrapolation e) {
  switch (e) {
    case Extrapolation::none: return "none";
    case Extrapolation::aitken: return "aitken";
    case Extrapolation::richardson: return "richardson";
  }
  return "none";
}

std::vector<long> powers_of_two(int lo, int hi) {
  if (lo < 0 || hi < lo || hi > 62) fail(ErrorKind::domain, "invalid power-of-two range");
  std::vector<long> out;
  for (int k = lo; k <= hi; ++k) out.push_back(1L << k);
  return out;
}

RatioSequence analyze_sequence(const std::function<double(long)>& f,
                               std::span<const long> indices) {
  if (indices.size() < 4)
    fail(ErrorKind::insufficient_points, "sequence analysis needs at least 4 indices, got " +
                                             std::to_string(indices.size()));
  for (std::size_t i = 0; i < indices.size(); ++i) {
    if (indices[i] <= 0) fail(ErrorKind::domain, "sequence indices must be positive");
    if (i > 0 && indices[i] <= indices[i - 1])
      fail(ErrorKind::domain, "sequence indices must be strictly increasing");
  }

  RatioSequence seq;
  seq.indices.assign(indices.begin(), indices.end());
  seq.values.reserve(indices.size());
  for (long i : indices) {
    const double v = f(i);
    if (!std::isfinite(v)) fail(ErrorKind::domain, "sequence value is not finite");
    seq.values.push_back(v);
  }
  const std::size_t n = seq.values.size();
  const auto& v = seq.values;

  const double scale = std::max(1.0, std::abs(v.back()));
  double max_step = 0.0;
  for (std::size_t i = 1; i < n; ++i) max_step = std::max(max_step, std::abs(v[i] - v[i - 1]));
  if (max_step <= 4.0 * std::numeric_limits<double>::epsilon() * scale) {
    seq.limit_estimate = v.back();
    seq.rate_estimate = std::numeric_limits<double>::quiet_NaN();
    seq.rate_constant = 0.0;
    seq.extrapolation_method = Extrapolation::none;
    seq.warnings.push_back("constant sequence: convergence rate undefined");
    return seq;
  }

  const std::size_t tail_start = n - std::max<std::size_t>(3, n / 2);
  int sign = 0;
  for (std::size_t i = tail_start + 1; i < n; ++i) {
    const double step = v[i] - v[i - 1];
    const int s = step > 0 ? 1 : (step < 0 ? -1 : 0);
    if (s == 0) continue;
    if (sign != 0 && s != sign) {
      seq.warnings.push_back("tail is not monotone; extrapolation may be unreliable");
      break;
    }
    sign = s;
  }

  const double d1 = v[n - 2] - v[n - 3];
  const double d2 = v[n - 1] - v[n - 2];
  double aitken = v[n - 1];
  if (d2 - d1 != 0.0) aitken = v[n - 1] - d2 * d2 / (d2 - d1);
  seq.limit_estimate = aitken;
  seq.extrapolation_method = Extrapolation::aitken;

  RateFit rough = fit_rate(indices, v, aitken);
  if (rough.ok && rough.q > 0.0) {
    double q = rough.q;
    if (std::abs(q - std::round(q)) < 0.1 && std::round(q) >= 1.0) q = std::round(q);
    const std::size_t corrections = std::min<std::size_t>(3, n - 1);
    double limit = 0.0;
    if (richardson_limit(indices, v, q, corrections, limit)) {
      seq.limit_estimate = limit;
      seq.extrapolation_method = Extrapolation::richardson;
    }
  }

  const RateFit fine = fit_rate(indices, v, seq.limit_estimate);
  if (fine.ok) {
    seq.rate_estimate = fine.q;
    seq.rate_constant = fine.c;
  } else {
    seq.rate_estimate = std::numeric_limits<double>::quiet_NaN();
    seq.warnings.push_back("tail gaps fall below round-off; rate not measurable");
  }
  return seq;
}

}  // namespace pldual
