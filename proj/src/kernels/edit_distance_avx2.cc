// Compiled with -mavx2; only reached through the dispatcher after a CPU check.

#include "padya/kernels/edit_distance.h"

#include <algorithm>

#if defined(__AVX2__)
#include <immintrin.h>
#endif

namespace padya::kernels {

#if defined(__AVX2__)

void edit_distances_avx2(std::span<const Symbol> query, const TemplateBank& bank,
                         std::span<std::int32_t> out) {
  const __m256i ones = _mm256_set1_epi32(-1);
  const __m256i one = _mm256_set1_epi32(1);
  alignas(32) std::int32_t lane_scores[kLaneWidth];

  for (std::size_t base = 0; base < bank.padded_size(); base += kLaneWidth) {
    const __m256i eq_l =
        _mm256_loadu_si256(reinterpret_cast<const __m256i*>(bank.eq_laghu() + base));
    const __m256i eq_g =
        _mm256_loadu_si256(reinterpret_cast<const __m256i*>(bank.eq_guru() + base));
    const __m256i len = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(bank.lengths() + base));
    const __m256i top = _mm256_sub_epi32(len, one);

    __m256i pv = ones;
    __m256i mv = _mm256_setzero_si256();
    __m256i score = len;
    for (Symbol s : query) {
      const __m256i eq = s == Symbol::kLaghu ? eq_l : s == Symbol::kGuru ? eq_g : ones;
      const __m256i xv = _mm256_or_si256(eq, mv);
      const __m256i sum = _mm256_add_epi32(_mm256_and_si256(eq, pv), pv);
      const __m256i xh = _mm256_or_si256(_mm256_xor_si256(sum, pv), eq);
      __m256i ph = _mm256_or_si256(mv, _mm256_andnot_si256(_mm256_or_si256(xh, pv), ones));
      __m256i mh = _mm256_and_si256(pv, xh);
      score = _mm256_add_epi32(score, _mm256_and_si256(_mm256_srlv_epi32(ph, top), one));
      score = _mm256_sub_epi32(score, _mm256_and_si256(_mm256_srlv_epi32(mh, top), one));
      ph = _mm256_or_si256(_mm256_slli_epi32(ph, 1), one);
      mh = _mm256_slli_epi32(mh, 1);
      pv = _mm256_or_si256(mh, _mm256_andnot_si256(_mm256_or_si256(xv, ph), ones));
      mv = _mm256_and_si256(ph, xv);
    }

    _mm256_store_si256(reinterpret_cast<__m256i*>(lane_scores), score);
    const std::size_t n = std::min(kLaneWidth, bank.size() > base ? bank.size() - base : 0);
    for (std::size_t k = 0; k < n; ++k) out[base + k] = lane_scores[k];
  }
}

#else

void edit_distances_avx2(std::span<const Symbol> query, const TemplateBank& bank,
                         std::span<std::int32_t> out) {
  edit_distances_scalar(query, bank, out);
}

#endif

}  // namespace padya::kernels
