// Compiled with -mavx2; only reached through the runtime dispatcher.
#include <immintrin.h>

#include "verbprof/kernels/pair_counts.hpp"

namespace verbprof::kernels {

namespace {

inline std::int64_t hsum(__m256i v) {
  alignas(32) std::int64_t lanes[4];
  _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), v);
  return lanes[0] + lanes[1] + lanes[2] + lanes[3];
}

// Comparison masks are all-ones (-1) per true lane, so subtracting them
// from a 64-bit accumulator counts matches without leaving vector registers.
inline __m256i tally(__m256i acc, __m256d mask) { return _mm256_sub_epi64(acc, _mm256_castpd_si256(mask)); }

}  // namespace

PairCounts pair_counts_avx2(std::span<const double> xs, std::span<const double> ys) {
  const std::size_t n = xs.size();
  const double* x = xs.data();
  const double* y = ys.data();

  __m256i conc = _mm256_setzero_si256();
  __m256i disc = _mm256_setzero_si256();
  __m256i tx = _mm256_setzero_si256();
  __m256i ty = _mm256_setzero_si256();
  __m256i txy = _mm256_setzero_si256();
  PairCounts tail;

  for (std::size_t i = 0; i < n; ++i) {
    const __m256d xi = _mm256_set1_pd(x[i]);
    const __m256d yi = _mm256_set1_pd(y[i]);
    std::size_t j = i + 1;
    for (; j + 4 <= n; j += 4) {
      const __m256d xj = _mm256_loadu_pd(x + j);
      const __m256d yj = _mm256_loadu_pd(y + j);
      const __m256d xgt = _mm256_cmp_pd(xi, xj, _CMP_GT_OQ);
      const __m256d xlt = _mm256_cmp_pd(xi, xj, _CMP_LT_OQ);
      const __m256d ygt = _mm256_cmp_pd(yi, yj, _CMP_GT_OQ);
      const __m256d ylt = _mm256_cmp_pd(yi, yj, _CMP_LT_OQ);
      const __m256d xeq = _mm256_cmp_pd(xi, xj, _CMP_EQ_OQ);
      const __m256d yeq = _mm256_cmp_pd(yi, yj, _CMP_EQ_OQ);

      conc = tally(conc, _mm256_or_pd(_mm256_and_pd(xgt, ygt), _mm256_and_pd(xlt, ylt)));
      disc = tally(disc, _mm256_or_pd(_mm256_and_pd(xgt, ylt), _mm256_and_pd(xlt, ygt)));
      tx = tally(tx, _mm256_andnot_pd(yeq, xeq));
      ty = tally(ty, _mm256_andnot_pd(xeq, yeq));
      txy = tally(txy, _mm256_and_pd(xeq, yeq));
    }
    for (; j < n; ++j) {
      const int sx = (x[i] > x[j]) - (x[i] < x[j]);
      const int sy = (y[i] > y[j]) - (y[i] < y[j]);
      if (sx == 0 && sy == 0) {
        ++tail.joint_ties;
      } else if (sx == 0) {
        ++tail.x_ties;
      } else if (sy == 0) {
        ++tail.y_ties;
      } else if (sx == sy) {
        ++tail.concordant;
      } else {
        ++tail.discordant;
      }
    }
  }

  return PairCounts{hsum(conc) + tail.concordant, hsum(disc) + tail.discordant, hsum(tx) + tail.x_ties,
                    hsum(ty) + tail.y_ties, hsum(txy) + tail.joint_ties};
}

}  // namespace verbprof::kernels
