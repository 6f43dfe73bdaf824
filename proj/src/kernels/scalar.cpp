#include <cmath>

#include "detail.hpp"

namespace pldual::kernels {
namespace {

void sturm_counts_scalar(std::span<const double> diag, std::span<const double> offdiag_sq,
                         double pivmin, std::span<const double> shifts, std::span<int> counts) {
  const std::size_t n = diag.size();
  for (std::size_t s = 0; s < shifts.size(); ++s) {
    const double shift = shifts[s];
    int count = 0;
    double q = diag[0] - shift;
    if (std::abs(q) < pivmin) q = -pivmin;
    if (q < 0.0) ++count;
    for (std::size_t i = 1; i < n; ++i) {
      q = (diag[i] - shift) - offdiag_sq[i - 1] / q;
      if (std::abs(q) < pivmin) q = -pivmin;
      if (q < 0.0) ++count;
    }
    counts[s] = count;
  }
}

DoubleDouble rational_product_scalar(const RationalFactor& f, long first, long last) {
  DoubleDouble acc{1.0, 0.0};
  for (long j = first; j <= last; ++j) {
    const double x = static_cast<double>(j);
    acc = detail::dd_mul_d(acc, detail::factor_num(f, x));
    acc = detail::dd_div_d(acc, detail::factor_den(f, x));
  }
  return acc;
}

void apply_stencil_scalar(const StencilView& v, std::span<const double> f, std::span<double> out) {
  const std::size_t rows = v.rows;
  for (std::size_t i = 0; i < rows; ++i) {
    double d1 = 0.0;
    double d2 = 0.0;
    for (std::size_t k = 0; k < v.width; ++k) {
      const double fk = f[i + k];
      d1 = d1 + v.w1[k * rows + i] * fk;
      d2 = d2 + v.w2[k * rows + i] * fk;
    }
    const std::size_t c = i + v.width / 2;
    out[i] = (v.kinetic * d2 + v.first[i] * d1) + v.diag[i] * f[c];
  }
}

constexpr KernelTable kScalar{Isa::scalar, &sturm_counts_scalar, &rational_product_scalar,
                              &apply_stencil_scalar};

}  // namespace

const KernelTable& scalar_table() { return kScalar; }

}  // namespace pldual::kernels
