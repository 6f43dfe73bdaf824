#pragma once

#include <cmath>

#include "pldual/kernels.hpp"

namespace pldual::kernels::detail {

// Internal linkage: this header is compiled both with and without -mfma, and
// a merged inline definition could leak FMA instructions into the scalar
// path.
namespace {

inline DoubleDouble fast_two_sum(double a, double b) {
  const double s = a + b;
  return {s, b - (s - a)};
}

// (hi, lo) * m for an exact double m.
inline DoubleDouble dd_mul_d(DoubleDouble x, double m) {
  const double p = x.hi * m;
  const double e = std::fma(x.hi, m, -p);
  return fast_two_sum(p, x.lo * m + e);
}

// (hi, lo) / q for an exact double q; the remainder hi - q*t is exact.
inline DoubleDouble dd_div_d(DoubleDouble x, double q) {
  const double t = x.hi / q;
  const double r = std::fma(-t, q, x.hi);
  return fast_two_sum(t, (r + x.lo) / q);
}

inline DoubleDouble dd_mul(DoubleDouble a, DoubleDouble b) {
  const double p = a.hi * b.hi;
  double e = std::fma(a.hi, b.hi, -p);
  e += a.hi * b.lo + a.lo * b.hi;
  return fast_two_sum(p, e);
}

inline double factor_num(const RationalFactor& f, double j) { return (f.n2 * j + f.n1) * j + f.n0; }
inline double factor_den(const RationalFactor& f, double j) { return (f.d2 * j + f.d1) * j + f.d0; }

}  // namespace

const KernelTable* avx2_table_if_built();

}  // namespace pldual::kernels::detail
