#include <immintrin.h>

#include <cmath>

#include "detail.hpp"

namespace pldual::kernels {
namespace {

// Four shifts per register; the Sturm recurrence is serial along the
// matrix, so lanes run independent shifts in lockstep.
void sturm_counts_avx2(std::span<const double> diag, std::span<const double> offdiag_sq,
                       double pivmin, std::span<const double> shifts, std::span<int> counts) {
  const std::size_t n = diag.size();
  const __m256d vpiv = _mm256_set1_pd(pivmin);
  const __m256d vnegpiv = _mm256_set1_pd(-pivmin);
  const __m256d zero = _mm256_setzero_pd();
  const __m256d sign_mask = _mm256_set1_pd(-0.0);
  const __m256i one = _mm256_set1_epi64x(1);

  auto fix = [&](__m256d q) {
    const __m256d aq = _mm256_andnot_pd(sign_mask, q);
    return _mm256_blendv_pd(q, vnegpiv, _mm256_cmp_pd(aq, vpiv, _CMP_LT_OQ));
  };
  auto neg = [&](__m256d q) {
    return _mm256_and_si256(_mm256_castpd_si256(_mm256_cmp_pd(q, zero, _CMP_LT_OQ)), one);
  };

  std::size_t s = 0;
  for (; s + 4 <= shifts.size(); s += 4) {
    const __m256d shift = _mm256_loadu_pd(shifts.data() + s);
    __m256d q = fix(_mm256_sub_pd(_mm256_set1_pd(diag[0]), shift));
    __m256i count = neg(q);
    for (std::size_t i = 1; i < n; ++i) {
      const __m256d t = _mm256_sub_pd(_mm256_set1_pd(diag[i]), shift);
      q = fix(_mm256_sub_pd(t, _mm256_div_pd(_mm256_set1_pd(offdiag_sq[i - 1]), q)));
      count = _mm256_add_epi64(count, neg(q));
    }
    alignas(32) long long c[4];
    _mm256_store_si256(reinterpret_cast<__m256i*>(c), count);
    for (int lane = 0; lane < 4; ++lane) counts[s + lane] = static_cast<int>(c[lane]);
  }
  if (s < shifts.size())
    scalar_table().sturm_counts(diag, offdiag_sq, pivmin, shifts.subspan(s), counts.subspan(s));
}

struct DD4 {
  __m256d hi;
  __m256d lo;
};

inline DD4 fast_two_sum4(__m256d a, __m256d b) {
  const __m256d s = _mm256_add_pd(a, b);
  return {s, _mm256_sub_pd(b, _mm256_sub_pd(s, a))};
}

// Lane l accumulates j = first + l, first + l + 4, ...; the four partial
// products are folded in double-double at the end.
DoubleDouble rational_product_avx2(const RationalFactor& f, long first, long last) {
  DD4 acc{_mm256_set1_pd(1.0), _mm256_setzero_pd()};
  const __m256d n2 = _mm256_set1_pd(f.n2), n1 = _mm256_set1_pd(f.n1), n0 = _mm256_set1_pd(f.n0);
  const __m256d d2 = _mm256_set1_pd(f.d2), d1 = _mm256_set1_pd(f.d1), d0 = _mm256_set1_pd(f.d0);
  const __m256d step = _mm256_set1_pd(4.0);
  long j = first;
  __m256d x = _mm256_setr_pd(double(j), double(j + 1), double(j + 2), double(j + 3));
  for (; j + 3 <= last; j += 4) {
    const __m256d num = _mm256_add_pd(_mm256_mul_pd(_mm256_add_pd(_mm256_mul_pd(n2, x), n1), x), n0);
    const __m256d den = _mm256_add_pd(_mm256_mul_pd(_mm256_add_pd(_mm256_mul_pd(d2, x), d1), x), d0);

    const __m256d p = _mm256_mul_pd(acc.hi, num);
    const __m256d e = _mm256_fmsub_pd(acc.hi, num, p);
    acc = fast_two_sum4(p, _mm256_add_pd(_mm256_mul_pd(acc.lo, num), e));

    const __m256d t = _mm256_div_pd(acc.hi, den);
    const __m256d r = _mm256_fnmadd_pd(t, den, acc.hi);
    acc = fast_two_sum4(t, _mm256_div_pd(_mm256_add_pd(r, acc.lo), den));

    x = _mm256_add_pd(x, step);
  }
  alignas(32) double hi[4];
  alignas(32) double lo[4];
  _mm256_store_pd(hi, acc.hi);
  _mm256_store_pd(lo, acc.lo);
  DoubleDouble out = detail::dd_mul(detail::dd_mul({hi[0], lo[0]}, {hi[1], lo[1]}),
                                    detail::dd_mul({hi[2], lo[2]}, {hi[3], lo[3]}));
  if (j <= last) out = detail::dd_mul(out, scalar_table().rational_product(f, j, last));
  return out;
}

void apply_stencil_avx2(const StencilView& v, std::span<const double> f, std::span<double> out) {
  const std::size_t rows = v.rows;
  const __m256d kin = _mm256_set1_pd(v.kinetic);
  std::size_t i = 0;
  for (; i + 4 <= rows; i += 4) {
    __m256d d1 = _mm256_setzero_pd();
    __m256d d2 = _mm256_setzero_pd();
    for (std::size_t k = 0; k < v.width; ++k) {
      const __m256d fk = _mm256_loadu_pd(f.data() + i + k);
      d1 = _mm256_add_pd(d1, _mm256_mul_pd(_mm256_loadu_pd(v.w1.data() + k * rows + i), fk));
      d2 = _mm256_add_pd(d2, _mm256_mul_pd(_mm256_loadu_pd(v.w2.data() + k * rows + i), fk));
    }
    const __m256d fc = _mm256_loadu_pd(f.data() + i + v.width / 2);
    const __m256d acc = _mm256_add_pd(_mm256_mul_pd(kin, d2),
                                      _mm256_mul_pd(_mm256_loadu_pd(v.first.data() + i), d1));
    _mm256_storeu_pd(out.data() + i,
                     _mm256_add_pd(acc, _mm256_mul_pd(_mm256_loadu_pd(v.diag.data() + i), fc)));
  }
  for (; i < rows; ++i) {
    double d1 = 0.0;
    double d2 = 0.0;
    for (std::size_t k = 0; k < v.width; ++k) {
      d1 = d1 + v.w1[k * rows + i] * f[i + k];
      d2 = d2 + v.w2[k * rows + i] * f[i + k];
    }
    out[i] = (v.kinetic * d2 + v.first[i] * d1) + v.diag[i] * f[i + v.width / 2];
  }
}

constexpr KernelTable kAvx2{Isa::avx2, &sturm_counts_avx2, &rational_product_avx2,
                            &apply_stencil_avx2};

}  // namespace

namespace detail {
const KernelTable* avx2_table_if_built() { return &kAvx2; }
}  // namespace detail

}  // namespace pldual::kernels
