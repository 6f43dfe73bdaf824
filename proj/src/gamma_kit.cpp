#include "pldual/gamma_kit.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include "pldual/errors.hpp"
#include "pldual/kernels.hpp"

namespace pldual {
namespace {

constexpr double kStirlingFloor = 15.0;

// B_{2k} / (2k (2k-1)), k = 1..8
constexpr std::array<double, 8> kStirling{
    1.0 / 12.0,       -1.0 / 360.0,        1.0 / 1260.0, -1.0 / 1680.0,
    1.0 / 1188.0,     -691.0 / 360360.0,   1.0 / 156.0,  -3617.0 / 122400.0,
};

// Asymptotic tail sum_k c_k x^(1-2k), valid for x >= kStirlingFloor.
double stirling_tail(double x) {
  const double inv = 1.0 / x;
  const double inv2 = inv * inv;
  double s = kStirling.back();
  for (int k = static_cast<int>(kStirling.size()) - 2; k >= 0; --k) s = s * inv2 + kStirling[k];
  return s * inv;
}

void require_positive(double x, const char* what) {
  if (!(x > 0.0) || !std::isfinite(x))
    fail(ErrorKind::domain, std::string(what) + " must be positive and finite");
}

int shift_for(double x) {
  return x >= kStirlingFloor ? 0 : static_cast<int>(std::ceil(kStirlingFloor - x));
}

kernels::RationalFactor factor_of(ProductKind kind) {
  switch (kind) {
    case ProductKind::minus: return {0, 2, 0, 0, 2, -1};
    case ProductKind::plus: return {0, 2, 0, 0, 2, 1};
    case ProductKind::wallis: return {4, 0, 0, 4, 0, -1};
  }
  return {};
}

void require_length(long n) {
  if (n < 1 || n > kMaxProductLength)
    fail(ErrorKind::domain, "product length must lie in [1, " +
                                std::to_string(kMaxProductLength) + "], got " +
                                std::to_string(n));
}

}  // namespace

double log_gamma(double x) {
  require_positive(x, "log_gamma argument");
  const int m = shift_for(x);
  double prod = 1.0;
  for (int i = 0; i < m; ++i) prod *= x + i;
  const double y = x + m;
  const double half_log_two_pi = 0.5 * std::log(2.0 * std::numbers::pi);
  const double lg = (y - 0.5) * std::log(y) - y + half_log_two_pi + stirling_tail(y);
  return m == 0 ? lg : lg - std::log(prod);
}

double log_gamma_ratio(double a, double b) {
  require_positive(a, "gamma_ratio numerator argument");
  require_positive(b, "gamma_ratio denominator argument");
  if (a == b) return 0.0;

  // Gamma(a)/Gamma(b) = Gamma(a+m)/Gamma(b+m) * prod_{i<m} (b+i)/(a+i)
  const int m = shift_for(std::min(a, b));
  double prod = 1.0;
  for (int i = 0; i < m; ++i) prod *= (b + i) / (a + i);
  const double big_a = a + m;
  const double big_b = b + m;
  const double delta = a - b;

  // (A-1/2) ln A - A - (B-1/2) ln B + B  regrouped around B.
  const double lead = (big_b - 0.5) * std::log1p(delta / big_b) + delta * std::log(big_a) - delta;
  const double tail = stirling_tail(big_a) - stirling_tail(big_b);
  return lead + tail + (m == 0 ? 0.0 : std::log(prod));
}

double gamma_ratio(double a, double b) { return std::exp(log_gamma_ratio(a, b)); }

double duplication_check(double n) {
  require_positive(n, "duplication argument");
  double log_lhs_over_rhs = 0.0;
  if (n >= kStirlingFloor) {
    // The leading Stirling terms of ln Gamma(2n) - ln Gamma(n) - ln Gamma(n+1/2)
    // - (2n-1) ln 2 + ln Gamma(1/2) collapse to -n log1p(1/(2n)) + 1/2.
    log_lhs_over_rhs = -n * std::log1p(0.5 / n) + 0.5 + stirling_tail(2.0 * n) -
                       stirling_tail(n) - stirling_tail(n + 0.5);
  } else {
    const double lhs = log_gamma(2.0 * n);
    const double rhs = (2.0 * n - 1.0) * std::numbers::ln2 + log_gamma(n) +
                       log_gamma(n + 0.5) - log_gamma(0.5);
    log_lhs_over_rhs = lhs - rhs;
  }
  return std::abs(std::expm1(-log_lhs_over_rhs));
}

double partial_product(ProductKind kind, long n) {
  require_length(n);
  return kernels::active().rational_product(factor_of(kind), 1, n).value();
}

ProductForm expand_product(ProductKind kind, long n) {
  require_length(n);
  const kernels::RationalFactor f = factor_of(kind);
  ProductForm out;
  out.kind = kind;
  out.n = n;
  out.factors.reserve(static_cast<std::size_t>(n));
  for (long j = 1; j <= n; ++j) {
    const double x = static_cast<double>(j);
    out.factors.push_back(((f.n2 * x + f.n1) * x + f.n0) / ((f.d2 * x + f.d1) * x + f.d0));
  }
  out.value = partial_product(kind, n);
  return out;
}

}  // namespace pldual
