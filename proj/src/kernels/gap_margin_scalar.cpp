#include <algorithm>
#include <cmath>

#include "phaserank/angle.hpp"
#include "phaserank/kernels/kernels.hpp"

namespace phaserank::kernels::scalar {

namespace {

inline double reduce(double x) { return x - kTwoPi * std::floor(x / kTwoPi); }

}  // namespace

void gap_margin_row(const double* a, const double* b, std::size_t columns, const double* s, double t,
                    std::size_t count, double* out) {
    for (std::size_t k = 0; k < count; ++k) {
        double best = -kPi;
        for (std::size_t j = 0; j < columns; ++j) {
            const double x = reduce(s[k] + a[j]);
            const double y = reduce(t + b[j]);
            const double lo = std::min(x, y);
            const double hi = std::max(x, y);
            const double gap = std::max(std::max(lo, hi - lo), kTwoPi - hi);
            best = std::max(best, gap - kPi);
        }
        out[k] = best;
    }
}

}  // namespace phaserank::kernels::scalar
