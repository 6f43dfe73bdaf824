#pragma once

// Variational/exact energy ratios and the sequences whose classical limits
// reproduce the Wallis product and its reciprocal square root.

#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace pldual {

// <H>_min / E_0 for d-dimensional hydrogen with the Gaussian trial r^l e^{-a r^2}.
double ratio_hydrogen(int l, int d = 3);

// <H>_min / E_0 for the D = 4 oscillator with trial rho^L e^{-a rho^4}.
double ratio_oscillator(int L);

// sqrt(l + 3/2) / (l + 1) * Gamma(l + 3/2) / Gamma(l + 1); equals
// ratio_oscillator(2l) and (2/pi * wallis_partial(l + 1))^(-1/2).
double main_sequence(int l);

// sqrt(s + 1/2) / s * Gamma(s + 1/2) / Gamma(s) with s = l + k. Evaluated as
// a function of s alone, so swapping l and k cannot change a bit.
double symmetric_ratio(int l, int k);

enum class Extrapolation { none, aitken, richardson };

std::string_view to_string(Extrapolation e);

struct RatioSequence {
  std::vector<long> indices;
  std::vector<double> values;
  double limit_estimate = 0.0;
  double rate_estimate = 0.0;  // q in |f - limit| ~ C idx^-q; NaN if undefined
  double rate_constant = 0.0;  // C
  Extrapolation extrapolation_method = Extrapolation::none;
  std::vector<std::string> warnings;
};

// Samples f at the (strictly increasing, positive) indices, extrapolates the
// limit and measures the algebraic convergence rate on the tail. Needs at
// least four indices.
RatioSequence analyze_sequence(const std::function<double(long)>& f,
                               std::span<const long> indices);

// 2^lo, 2^(lo+1), ..., 2^hi
std::vector<long> powers_of_two(int lo, int hi);

}  // namespace pldual
