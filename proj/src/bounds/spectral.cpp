#include <algorithm>
#include <cmath>
#include <vector>

#include "phaserank/bounds.hpp"
#include "phaserank/errors.hpp"
#include "phaserank/kernels/kernels.hpp"

namespace phaserank {

namespace {

constexpr double kJacobiThreshold = 1e-12;
constexpr int kMaxSweeps = 80;

}  // namespace

double spectral_norm(const ComplexMatrix& a_in) {
    if (a_in.size() == 0) throw DomainError("spectral norm of an empty matrix");
    // Rotate columns of the orientation with fewer columns.
    const ComplexMatrix a = a_in.cols() > a_in.rows() ? ComplexMatrix(a_in.adjoint()) : a_in;
    const auto n = static_cast<std::size_t>(a.rows());
    const auto m = static_cast<std::size_t>(a.cols());
    std::vector<double> re(n * m), im(n * m);
    for (std::size_t j = 0; j < m; ++j)
        for (std::size_t i = 0; i < n; ++i) {
            const auto z = a(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
            re[j * n + i] = z.real();
            im[j * n + i] = z.imag();
        }

    const auto& k = kernels::active_kernels();
    bool converged = m == 1;
    for (int sweep = 0; sweep < kMaxSweeps && !converged; ++sweep) {
        converged = true;
        for (std::size_t p = 0; p + 1 < m; ++p) {
            for (std::size_t q = p + 1; q < m; ++q) {
                double* xr = re.data() + p * n;
                double* xi = im.data() + p * n;
                double* yr = re.data() + q * n;
                double* yi = im.data() + q * n;
                const auto g = k.column_gram(xr, xi, yr, yi, n);
                const double mag = std::hypot(g.gamma_re, g.gamma_im);
                if (mag <= kJacobiThreshold * std::sqrt(g.alpha * g.beta)) continue;
                converged = false;
                const double zeta = (g.beta - g.alpha) / (2.0 * mag);
                const double t = std::copysign(1.0, zeta) / (std::fabs(zeta) + std::sqrt(1.0 + zeta * zeta));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                k.rotate_columns(xr, xi, yr, yi, n, c, c * t, g.gamma_re / mag, g.gamma_im / mag);
            }
        }
    }
    if (!converged) throw SolverError("one-sided Jacobi did not converge in " + std::to_string(kMaxSweeps) + " sweeps");

    double best = 0.0;
    for (std::size_t j = 0; j < m; ++j) {
        const auto g = k.column_gram(re.data() + j * n, im.data() + j * n, re.data() + j * n, im.data() + j * n, n);
        best = std::max(best, g.alpha);
    }
    return std::sqrt(best);
}

double forster_bound(const PhaseMatrix& theta) {
    const double nm = static_cast<double>(theta.rows()) * static_cast<double>(theta.cols());
    return std::sqrt(nm) / spectral_norm(theta.to_complex());
}

}  // namespace phaserank
