#pragma once

#include <vector>

namespace pldual {

// ln Gamma(x) for x > 0: Stirling series, shifted by recurrence below 15.
double log_gamma(double x);

// ln(Gamma(a) / Gamma(b)) without forming either log-gamma separately, so
// ratios of neighbouring arguments stay accurate to a few ulp even at 1e7.
double log_gamma_ratio(double a, double b);

// Gamma(a) / Gamma(b).
double gamma_ratio(double a, double b);

// |LHS - RHS| / |LHS| for Gamma(2n) = 2^(2n-1) Gamma(n) Gamma(n+1/2) / Gamma(1/2),
// evaluated in log space.
double duplication_check(double n);

enum class ProductKind {
  minus,   // prod 2j / (2j - 1)
  plus,    // prod 2j / (2j + 1)
  wallis,  // prod 4j^2 / (4j^2 - 1)
};

// The factors of a finite product together with its (compensated) value.
struct ProductForm {
  ProductKind kind = ProductKind::wallis;
  long n = 0;
  std::vector<double> factors;
  double value = 1.0;
};

// Largest n accepted by the partial products; keeps 4 j^2 exact in a double.
inline constexpr long kMaxProductLength = 10'000'000;

double partial_product(ProductKind kind, long n);
ProductForm expand_product(ProductKind kind, long n);

// sqrt(pi) Gamma(n+1)/Gamma(n+1/2) = prod_{j<=n} 2j/(2j-1)
inline double product_minus(long n) { return partial_product(ProductKind::minus, n); }
// (sqrt(pi)/2) Gamma(n+1)/Gamma(n+3/2) = prod_{j<=n} 2j/(2j+1)
inline double product_plus(long n) { return partial_product(ProductKind::plus, n); }
// prod_{j<=n} (2j)(2j) / ((2j-1)(2j+1)), increasing to pi/2
inline double wallis_partial(long n) { return partial_product(ProductKind::wallis, n); }

}  // namespace pldual
