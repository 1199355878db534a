#include "fuchscode/kernels.hpp"

#if defined(FXC_KERNEL_AVX2)

#include <immintrin.h>

#include <cstdint>
#include <limits>

namespace fxc {

std::size_t nearest_point_avx2(const double* xs, const double* ys, std::size_t n,
                               double qx, double qy) {
    std::size_t best = 0;
    double best_d = std::numeric_limits<double>::infinity();
    std::size_t i = 0;

    if (n >= 4) {
        const __m256d vqx = _mm256_set1_pd(qx);
        const __m256d vqy = _mm256_set1_pd(qy);
        __m256d lane_d = _mm256_set1_pd(std::numeric_limits<double>::infinity());
        __m256i lane_i = _mm256_setzero_si256();
        __m256i idx = _mm256_set_epi64x(3, 2, 1, 0);
        const __m256i four = _mm256_set1_epi64x(4);
        for (; i + 4 <= n; i += 4) {
            __m256d dx = _mm256_sub_pd(_mm256_loadu_pd(xs + i), vqx);
            __m256d dy = _mm256_sub_pd(_mm256_loadu_pd(ys + i), vqy);
            // mul+add, never fused: keeps the arithmetic identical to the
            // scalar kernel so results agree bit for bit.
            __m256d d = _mm256_add_pd(_mm256_mul_pd(dx, dx), _mm256_mul_pd(dy, dy));
            __m256d lt = _mm256_cmp_pd(d, lane_d, _CMP_LT_OQ);
            lane_d = _mm256_blendv_pd(lane_d, d, lt);
            lane_i = _mm256_castpd_si256(_mm256_blendv_pd(
                _mm256_castsi256_pd(lane_i), _mm256_castsi256_pd(idx), lt));
            idx = _mm256_add_epi64(idx, four);
        }
        alignas(32) double d4[4];
        alignas(32) std::int64_t i4[4];
        _mm256_store_pd(d4, lane_d);
        _mm256_store_si256(reinterpret_cast<__m256i*>(i4), lane_i);
        // Strict per-lane updates kept the earliest index in each lane, so the
        // lexicographic (distance, index) minimum is the global earliest.
        best = static_cast<std::size_t>(i4[0]);
        best_d = d4[0];
        for (int k = 1; k < 4; ++k) {
            auto cand = static_cast<std::size_t>(i4[k]);
            if (d4[k] < best_d || (d4[k] == best_d && cand < best)) {
                best_d = d4[k];
                best = cand;
            }
        }
    }
    for (; i < n; ++i) {
        double dx = xs[i] - qx, dy = ys[i] - qy;
        double d = dx * dx + dy * dy;
        if (d < best_d) {
            best_d = d;
            best = i;
        }
    }
    return best;
}

} // namespace fxc

#endif
