#include <algorithm>
#include <cmath>
#include <random>

#include "phaserank/errors.hpp"
#include "phaserank/scaling.hpp"

namespace phaserank {

namespace {

constexpr int kCoarseSteps = 48;
constexpr int kGoldenSteps = 40;

class HingeObjective {
public:
    HingeObjective(const PhaseMatrix& theta, double shift) : theta_(theta), shift_(shift), buf_(theta.rows()) {}

    double operator()(const std::vector<double>& y) const {
        double total = 0.0;
        for (std::size_t j = 0; j < theta_.cols(); ++j) {
            for (std::size_t i = 0; i < theta_.rows(); ++i) buf_[i] = Angle(y[i] + theta_(i, j).radians());
            total += std::max(0.0, gap_margin(buf_) + shift_);
        }
        return total;
    }

private:
    const PhaseMatrix& theta_;
    double shift_;
    mutable std::vector<Angle> buf_;
};

ScalingVector to_scaling(const std::vector<double>& y) {
    ScalingVector s;
    for (double v : y) s.scalars.emplace_back(Angle(v));
    return s;
}

// Best value of coordinate r: coarse scan of the circle, then golden section
// around the best sample.
double line_search(const HingeObjective& f, std::vector<double>& y, std::size_t r, double current) {
    const double h = kTwoPi / kCoarseSteps;
    const double start = y[r];
    double best_x = start, best_f = current;
    for (int k = 1; k < kCoarseSteps; ++k) {
        y[r] = start + k * h;
        const double v = f(y);
        if (v < best_f) {
            best_f = v;
            best_x = y[r];
        }
    }
    const double phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double lo = best_x - h, hi = best_x + h;
    double x1 = hi - phi * (hi - lo), x2 = lo + phi * (hi - lo);
    y[r] = x1;
    double f1 = f(y);
    y[r] = x2;
    double f2 = f(y);
    for (int it = 0; it < kGoldenSteps; ++it) {
        if (f1 <= f2) {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - phi * (hi - lo);
            y[r] = x1;
            f1 = f(y);
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + phi * (hi - lo);
            y[r] = x2;
            f2 = f(y);
        }
    }
    if (std::min(f1, f2) < best_f) {
        best_f = std::min(f1, f2);
        best_x = f1 <= f2 ? x1 : x2;
    }
    y[r] = Angle(best_x).radians();
    return best_f;
}

std::optional<ScalingVector> two_row_scaling(const PhaseMatrix& theta) {
    if (!phase_rank_is_one(theta)) return std::nullopt;
    // Row 1 is row 0 times e^{i beta}; rotating it by pi - beta makes every column antipodal.
    const double beta = (theta(1, 0) - theta(0, 0)).radians();
    ScalingVector s;
    s.scalars = {Angle{}, Angle(kPi - beta)};
    return s;
}

}  // namespace

std::optional<ScalingVector> search_noncolopsided_scaling(const PhaseMatrix& theta, const ScalingSearchOptions& opts) {
    const std::size_t n = theta.rows();
    if (n > theta.cols()) throw DomainError("scaling search needs rows <= cols");
    if (n == 1) return std::nullopt;  // every column is a single point
    if (n == 2) {
        auto s = two_row_scaling(theta);
        if (s && scaling_is_noncolopsided(theta, *s)) return s;
        return std::nullopt;
    }

    const HingeObjective f(theta, opts.hinge_shift);
    std::mt19937_64 rng(opts.seed);
    std::uniform_real_distribution<double> angle(0.0, kTwoPi);
    for (std::size_t restart = 0; restart < opts.restarts; ++restart) {
        std::vector<double> y(n, 0.0);
        for (std::size_t i = 1; i < n; ++i) y[i] = angle(rng);
        double value = f(y);
        for (int sweep = 0; sweep < opts.sweeps && value > 0.0; ++sweep) {
            const double before = value;
            for (std::size_t r = 1; r < n && value > 0.0; ++r) value = line_search(f, y, r, value);
            if (!(value < before)) break;
        }
        const auto s = to_scaling(y);
        if (scaling_is_noncolopsided(theta, s)) return s;
    }

    // Zero scalars: a noncolopsided scaling of a row-deleted submatrix lifts with a 0 in that row.
    for (std::size_t r = 0; r < n; ++r) {
        if (auto sub = search_noncolopsided_scaling(theta.without_row(r), opts)) {
            sub->scalars.insert(sub->scalars.begin() + static_cast<std::ptrdiff_t>(r), std::nullopt);
            if (scaling_is_noncolopsided(theta, *sub)) return sub;
        }
    }
    return std::nullopt;
}

}  // namespace phaserank
