// AVX2 variant of the same-page pair count. Compiled with -mavx2 on x86-64;
// callers must gate on avx2_available(). Popcount uses the nibble-shuffle
// table, accumulating into four 64-bit lanes.
#include "kn/kernel.hpp"

#if defined(__x86_64__) && defined(__AVX2__)

#include <immintrin.h>

namespace kn::kernel {

namespace {

inline __m256i popcount_epi64(__m256i v) {
    const __m256i table = _mm256_setr_epi8(0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4,
                                           0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4);
    const __m256i low_mask = _mm256_set1_epi8(0x0f);
    __m256i lo = _mm256_and_si256(v, low_mask);
    __m256i hi = _mm256_and_si256(_mm256_srli_epi16(v, 4), low_mask);
    __m256i cnt = _mm256_add_epi8(_mm256_shuffle_epi8(table, lo), _mm256_shuffle_epi8(table, hi));
    return _mm256_sad_epu8(cnt, _mm256_setzero_si256());
}

}  // namespace

std::uint64_t same_page_pairs_avx2(const packed_masks& masks, const std::uint64_t* pages) {
    const int w = masks.w;
    const int vec_end = w - (w % 4);
    __m256i acc = _mm256_setzero_si256();
    std::uint64_t tail = 0;
    for (int a = 0; a < masks.c; ++a) {
        const std::uint64_t* row = masks.upper_row(a);
        const bool south = (pages[a / 64] >> (a % 64)) & 1;
        const __m256i flip = _mm256_set1_epi64x(south ? 0 : -1);
        for (int t = 0; t < vec_end; t += 4) {
            __m256i r = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(row + t));
            __m256i p = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(pages + t));
            __m256i match = _mm256_xor_si256(p, flip);
            acc = _mm256_add_epi64(acc, popcount_epi64(_mm256_and_si256(r, match)));
        }
        for (int t = vec_end; t < w; ++t) {
            std::uint64_t match = south ? pages[t] : ~pages[t];
            tail += __builtin_popcountll(row[t] & match);
        }
    }
    alignas(32) std::uint64_t lanes[4];
    _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), acc);
    return lanes[0] + lanes[1] + lanes[2] + lanes[3] + tail;
}

}  // namespace kn::kernel

#else

namespace kn::kernel {

std::uint64_t same_page_pairs_avx2(const packed_masks& masks, const std::uint64_t* pages) {
    return same_page_pairs_scalar(masks, pages);
}

}  // namespace kn::kernel

#endif
