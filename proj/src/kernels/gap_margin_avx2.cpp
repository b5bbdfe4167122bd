#include <immintrin.h>

#include "phaserank/angle.hpp"
#include "phaserank/kernels/kernels.hpp"

namespace phaserank::kernels::avx2 {

namespace {

inline __m256d reduce(__m256d x, __m256d two_pi) {
    return _mm256_sub_pd(x, _mm256_mul_pd(two_pi, _mm256_floor_pd(_mm256_div_pd(x, two_pi))));
}

}  // namespace

// Four grid points per vector; same operation order as the scalar loop.
void gap_margin_row(const double* a, const double* b, std::size_t columns, const double* s, double t,
                    std::size_t count, double* out) {
    const __m256d two_pi = _mm256_set1_pd(kTwoPi);
    const __m256d pi = _mm256_set1_pd(kPi);
    std::size_t k = 0;
    for (; k + 4 <= count; k += 4) {
        const __m256d sv = _mm256_loadu_pd(s + k);
        __m256d best = _mm256_set1_pd(-kPi);
        for (std::size_t j = 0; j < columns; ++j) {
            const __m256d x = reduce(_mm256_add_pd(sv, _mm256_set1_pd(a[j])), two_pi);
            const __m256d y = reduce(_mm256_set1_pd(t + b[j]), two_pi);
            const __m256d lo = _mm256_min_pd(x, y);
            const __m256d hi = _mm256_max_pd(x, y);
            const __m256d gap =
                _mm256_max_pd(_mm256_max_pd(lo, _mm256_sub_pd(hi, lo)), _mm256_sub_pd(two_pi, hi));
            best = _mm256_max_pd(best, _mm256_sub_pd(gap, pi));
        }
        _mm256_storeu_pd(out + k, best);
    }
    if (k < count) scalar::gap_margin_row(a, b, columns, s + k, t, count - k, out + k);
}

}  // namespace phaserank::kernels::avx2
