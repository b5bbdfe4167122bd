#include "phaserank/kernels/kernels.hpp"

namespace phaserank::kernels::scalar {

ColumnGram column_gram(const double* xr, const double* xi, const double* yr, const double* yi, std::size_t n) {
    ColumnGram g{0.0, 0.0, 0.0, 0.0};
    for (std::size_t k = 0; k < n; ++k) {
        g.alpha += xr[k] * xr[k] + xi[k] * xi[k];
        g.beta += yr[k] * yr[k] + yi[k] * yi[k];
        // conj(x) * y
        g.gamma_re += xr[k] * yr[k] + xi[k] * yi[k];
        g.gamma_im += xr[k] * yi[k] - xi[k] * yr[k];
    }
    return g;
}

void rotate_columns(double* xr, double* xi, double* yr, double* yi, std::size_t n, double c, double s, double g_re,
                    double g_im) {
    for (std::size_t k = 0; k < n; ++k) {
        const double wr = g_re * yr[k] + g_im * yi[k];
        const double wi = g_re * yi[k] - g_im * yr[k];
        const double pr = xr[k], pi = xi[k];
        xr[k] = c * pr - s * wr;
        xi[k] = c * pi - s * wi;
        yr[k] = s * pr + c * wr;
        yi[k] = s * pi + c * wi;
    }
}

}  // namespace phaserank::kernels::scalar
