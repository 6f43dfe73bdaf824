#pragma once

// Data-parallel inner loops. Every kernel has a portable scalar reference
// and, on x86-64, an AVX2+FMA variant chosen at runtime from CPUID. The two
// are kept operation-for-operation identical where that is possible, so the
// equivalence tests can demand bit equality for the Sturm counts and the
// stencil, and a one-ulp band for the reordered product.

#include <cstddef>
#include <span>
#include <string_view>

namespace pldual::kernels {

enum class Isa { scalar, avx2 };

std::string_view to_string(Isa isa);

// Unevaluated sum hi + lo, |lo| <= ulp(hi)/2.
struct DoubleDouble {
  double hi = 1.0;
  double lo = 0.0;

  double value() const { return hi + lo; }
};

// Factor (n2 j^2 + n1 j + n0) / (d2 j^2 + d1 j + d0). Coefficients must keep
// numerator and denominator exactly representable over the requested range.
struct RationalFactor {
  double n2 = 0, n1 = 0, n0 = 0;
  double d2 = 0, d1 = 0, d0 = 0;
};

// Precomputed operator  out_i = kinetic * sum_k w2[k][i] f[i+k-h]
//                              + first[i] * sum_k w1[k][i] f[i+k-h]
//                              + diag[i] * f[i]
// for i in [0, rows), where h = width/2 and f is offset so that f[h] lines up
// with output row 0. Weight arrays are stored stencil-slot major:
// w1[k * rows + i].
struct StencilView {
  std::size_t rows = 0;
  std::size_t width = 0;
  double kinetic = 0.0;
  std::span<const double> w1;
  std::span<const double> w2;
  std::span<const double> first;
  std::span<const double> diag;
};

struct KernelTable {
  Isa isa;

  // counts[s] = number of eigenvalues of the symmetric tridiagonal matrix
  // (diag, offdiag) strictly below shifts[s]. offdiag_sq holds the squared
  // off-diagonal, length diag.size() - 1.
  void (*sturm_counts)(std::span<const double> diag, std::span<const double> offdiag_sq,
                       double pivmin, std::span<const double> shifts, std::span<int> counts);

  // Product over j = first..last (inclusive) of the rational factor, carried
  // in double-double.
  DoubleDouble (*rational_product)(const RationalFactor& factor, long first, long last);

  // out.size() == view.rows, f.size() == view.rows + view.width - 1.
  void (*apply_stencil)(const StencilView& view, std::span<const double> f,
                        std::span<double> out);
};

const KernelTable& scalar_table();
// nullptr when the AVX2 variant was not built or the CPU lacks AVX2/FMA.
const KernelTable* avx2_table();
// The table used by the numerical modules. Defaults to the best supported
// ISA; force() overrides it process-wide (used by the CLI and tests).
const KernelTable& active();
void force(Isa isa);
bool supported(Isa isa);

}  // namespace pldual::kernels
