#pragma once

// Inner loops with a portable reference version and an AVX2 version picked at
// runtime. PHASERANK_SIMD=scalar forces the reference path.

#include <cstddef>

namespace phaserank::kernels {

/// For each k < count, out[k] = max over columns j of the largest-gap margin
/// (largest circular gap - pi) of the three angles {0, s[k] + a[j], t + b[j]}.
/// The AVX2 version returns bit-identical results.
using GapMarginRowFn = void (*)(const double* a, const double* b, std::size_t columns, const double* s, double t,
                                std::size_t count, double* out);

/// Gram entries of two complex columns (split re/im storage):
/// alpha = |x|^2, beta = |y|^2, gamma = x^H y.
struct ColumnGram {
    double alpha;
    double beta;
    double gamma_re;
    double gamma_im;
};
using ColumnGramFn = ColumnGram (*)(const double* xr, const double* xi, const double* yr, const double* yi,
                                    std::size_t n);

/// With w = conj(g) * y:  x <- c x - s w,  y <- s x + c w.  (|g| = 1)
using RotateColumnsFn = void (*)(double* xr, double* xi, double* yr, double* yi, std::size_t n, double c, double s,
                                 double g_re, double g_im);

struct KernelTable {
    const char* name;
    GapMarginRowFn gap_margin_row;
    ColumnGramFn column_gram;
    RotateColumnsFn rotate_columns;
};

const KernelTable& scalar_kernels();

/// nullptr when AVX2 support was not compiled in or the CPU lacks it.
const KernelTable* avx2_kernels();

/// The table used by the library: AVX2 when available unless PHASERANK_SIMD=scalar.
const KernelTable& active_kernels();

namespace scalar {
void gap_margin_row(const double* a, const double* b, std::size_t columns, const double* s, double t,
                    std::size_t count, double* out);
ColumnGram column_gram(const double* xr, const double* xi, const double* yr, const double* yi, std::size_t n);
void rotate_columns(double* xr, double* xi, double* yr, double* yi, std::size_t n, double c, double s, double g_re,
                    double g_im);
}  // namespace scalar

#ifdef PHASERANK_WITH_AVX2
namespace avx2 {
void gap_margin_row(const double* a, const double* b, std::size_t columns, const double* s, double t,
                    std::size_t count, double* out);
ColumnGram column_gram(const double* xr, const double* xi, const double* yr, const double* yi, std::size_t n);
void rotate_columns(double* xr, double* xi, double* yr, double* yi, std::size_t n, double c, double s, double g_re,
                    double g_im);
}  // namespace avx2
#endif

}  // namespace phaserank::kernels
