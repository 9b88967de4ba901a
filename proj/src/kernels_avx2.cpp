// AVX2 variant of the dense product kernel. Compiled with -mavx2; only
// dispatched after a runtime CPU check, so the rest of the library stays
// runnable on baseline x86-64.

#include "clifford/kernels.hpp"

#if defined(CLIFFORD_BUILD_AVX2)

#include <immintrin.h>

namespace clifford::kernels {

namespace {

// Sign-bit XOR masks for every 4-lane negation pattern.
alignas(32) constexpr std::uint64_t kSignMask[16][4] = {
#define CLIFFORD_ROW(nib)                                      \
    {((nib) & 1u) ? 0x8000000000000000ull : 0ull,              \
     ((nib) & 2u) ? 0x8000000000000000ull : 0ull,              \
     ((nib) & 4u) ? 0x8000000000000000ull : 0ull,              \
     ((nib) & 8u) ? 0x8000000000000000ull : 0ull}
    CLIFFORD_ROW(0),  CLIFFORD_ROW(1),  CLIFFORD_ROW(2),  CLIFFORD_ROW(3),
    CLIFFORD_ROW(4),  CLIFFORD_ROW(5),  CLIFFORD_ROW(6),  CLIFFORD_ROW(7),
    CLIFFORD_ROW(8),  CLIFFORD_ROW(9),  CLIFFORD_ROW(10), CLIFFORD_ROW(11),
    CLIFFORD_ROW(12), CLIFFORD_ROW(13), CLIFFORD_ROW(14), CLIFFORD_ROW(15),
#undef CLIFFORD_ROW
};

}  // namespace

void product_avx2(const DensePlan& plan, const double* x, const double* y,
                  double* z) noexcept {
    const std::size_t size = plan.size();
    const std::size_t blocks = plan.blocks();
    for (std::size_t k = 0; k < size; ++k) {
        // Within a 4-aligned block, i^k permutes lanes by the low two bits
        // of k and relocates the block by the high bits.
        const std::size_t k_hi = k & ~std::size_t{3};
        const unsigned k_lo = static_cast<unsigned>(k & 3);
        const std::uint8_t* neg = plan.row(k);
        __m256d acc = _mm256_setzero_pd();
        for (std::size_t m = 0; m < blocks; ++m) {
            const __m256d xv = _mm256_loadu_pd(x + 4 * m);
            __m256d yv = _mm256_loadu_pd(y + ((4 * m) ^ k_hi));
            switch (k_lo) {
                case 1: yv = _mm256_permute_pd(yv, 0b0101); break;                      // (1,0,3,2)
                case 2: yv = _mm256_permute4x64_pd(yv, _MM_SHUFFLE(1, 0, 3, 2)); break; // (2,3,0,1)
                case 3: yv = _mm256_permute4x64_pd(yv, _MM_SHUFFLE(0, 1, 2, 3)); break; // (3,2,1,0)
                default: break;
            }
            const __m256d sign =
                _mm256_load_pd(reinterpret_cast<const double*>(kSignMask[neg[m]]));
            acc = _mm256_add_pd(acc, _mm256_mul_pd(xv, _mm256_xor_pd(yv, sign)));
        }
        const __m128d lo = _mm256_castpd256_pd128(acc);
        const __m128d hi = _mm256_extractf128_pd(acc, 1);
        __m128d sum = _mm_add_pd(lo, hi);
        sum = _mm_add_sd(sum, _mm_unpackhi_pd(sum, sum));
        z[k] = _mm_cvtsd_f64(sum);
    }
}

}  // namespace clifford::kernels

#endif  // CLIFFORD_BUILD_AVX2
