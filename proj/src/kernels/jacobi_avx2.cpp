#include <immintrin.h>

#include "phaserank/kernels/kernels.hpp"

namespace phaserank::kernels::avx2 {

namespace {

inline double hsum(__m256d v) {
    const __m128d lo = _mm256_castpd256_pd128(v);
    const __m128d hi = _mm256_extractf128_pd(v, 1);
    const __m128d s = _mm_add_pd(lo, hi);
    return _mm_cvtsd_f64(_mm_add_sd(s, _mm_unpackhi_pd(s, s)));
}

}  // namespace

ColumnGram column_gram(const double* xr, const double* xi, const double* yr, const double* yi, std::size_t n) {
    __m256d alpha = _mm256_setzero_pd(), beta = _mm256_setzero_pd();
    __m256d gre = _mm256_setzero_pd(), gim = _mm256_setzero_pd();
    std::size_t k = 0;
    for (; k + 4 <= n; k += 4) {
        const __m256d a = _mm256_loadu_pd(xr + k), b = _mm256_loadu_pd(xi + k);
        const __m256d c = _mm256_loadu_pd(yr + k), d = _mm256_loadu_pd(yi + k);
        alpha = _mm256_add_pd(alpha, _mm256_add_pd(_mm256_mul_pd(a, a), _mm256_mul_pd(b, b)));
        beta = _mm256_add_pd(beta, _mm256_add_pd(_mm256_mul_pd(c, c), _mm256_mul_pd(d, d)));
        gre = _mm256_add_pd(gre, _mm256_add_pd(_mm256_mul_pd(a, c), _mm256_mul_pd(b, d)));
        gim = _mm256_add_pd(gim, _mm256_sub_pd(_mm256_mul_pd(a, d), _mm256_mul_pd(b, c)));
    }
    ColumnGram g{hsum(alpha), hsum(beta), hsum(gre), hsum(gim)};
    if (k < n) {
        const ColumnGram tail = scalar::column_gram(xr + k, xi + k, yr + k, yi + k, n - k);
        g.alpha += tail.alpha;
        g.beta += tail.beta;
        g.gamma_re += tail.gamma_re;
        g.gamma_im += tail.gamma_im;
    }
    return g;
}

void rotate_columns(double* xr, double* xi, double* yr, double* yi, std::size_t n, double c, double s, double g_re,
                    double g_im) {
    const __m256d vc = _mm256_set1_pd(c), vs = _mm256_set1_pd(s);
    const __m256d gr = _mm256_set1_pd(g_re), gi = _mm256_set1_pd(g_im);
    std::size_t k = 0;
    for (; k + 4 <= n; k += 4) {
        const __m256d pr = _mm256_loadu_pd(xr + k), pi = _mm256_loadu_pd(xi + k);
        const __m256d qr = _mm256_loadu_pd(yr + k), qi = _mm256_loadu_pd(yi + k);
        const __m256d wr = _mm256_add_pd(_mm256_mul_pd(gr, qr), _mm256_mul_pd(gi, qi));
        const __m256d wi = _mm256_sub_pd(_mm256_mul_pd(gr, qi), _mm256_mul_pd(gi, qr));
        _mm256_storeu_pd(xr + k, _mm256_sub_pd(_mm256_mul_pd(vc, pr), _mm256_mul_pd(vs, wr)));
        _mm256_storeu_pd(xi + k, _mm256_sub_pd(_mm256_mul_pd(vc, pi), _mm256_mul_pd(vs, wi)));
        _mm256_storeu_pd(yr + k, _mm256_add_pd(_mm256_mul_pd(vs, pr), _mm256_mul_pd(vc, wr)));
        _mm256_storeu_pd(yi + k, _mm256_add_pd(_mm256_mul_pd(vs, pi), _mm256_mul_pd(vc, wi)));
    }
    if (k < n) scalar::rotate_columns(xr + k, xi + k, yr + k, yi + k, n - k, c, s, g_re, g_im);
}

}  // namespace phaserank::kernels::avx2
