#include "phaserank/colop.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "phaserank/convexsolve.hpp"
#include "phaserank/errors.hpp"
#include "phaserank/tolerances.hpp"

namespace phaserank {

double largest_circular_gap(std::span<const Angle> points) {
    if (points.empty()) throw DomainError("point set must be nonempty");
    std::vector<double> a(points.size());
    std::transform(points.begin(), points.end(), a.begin(), [](Angle x) { return x.radians(); });
    std::sort(a.begin(), a.end());
    double gap = a.front() + kTwoPi - a.back();
    for (std::size_t k = 1; k < a.size(); ++k) gap = std::max(gap, a[k] - a[k - 1]);
    return gap;
}

double gap_margin(std::span<const Angle> points) { return largest_circular_gap(points) - kPi; }

bool is_colopsided_gap(std::span<const Angle> points) {
    if (points.empty()) throw DomainError("point set must be nonempty");
    const Angle first = points.front();
    bool collinear = true;
    bool coincident = true;
    for (Angle p : points) {
        const double d = circular_distance(p, first);  // in [0, pi]
        if (d > tol::kAngle) coincident = false;
        if (d > tol::kAngle && d < kPi - tol::kAngle) collinear = false;
    }
    if (collinear) return coincident;
    return largest_circular_gap(points) >= kPi - tol::kAngle;
}

RelintResult relint_contains_origin(std::span<const Angle> points) {
    if (points.empty()) throw DomainError("point set must be nonempty");
    const auto k = static_cast<Eigen::Index>(points.size());
    // Variables: mu_1..mu_k >= 0 and free t, with weight w_k = mu_k + t.
    convex::LinearProgram lp;
    lp.objective = Eigen::VectorXd::Zero(k + 1);
    lp.objective(k) = -1.0;
    lp.eq_matrix = Eigen::MatrixXd::Zero(3, k + 1);
    lp.eq_rhs = Eigen::Vector3d(0.0, 0.0, 1.0);
    lp.lower = Eigen::VectorXd::Zero(k + 1);
    lp.lower(k) = -std::numeric_limits<double>::infinity();
    double sx = 0.0, sy = 0.0;
    for (Eigen::Index i = 0; i < k; ++i) {
        const auto z = points[static_cast<std::size_t>(i)].unit();
        lp.eq_matrix(0, i) = z.real();
        lp.eq_matrix(1, i) = z.imag();
        lp.eq_matrix(2, i) = 1.0;
        sx += z.real();
        sy += z.imag();
    }
    lp.eq_matrix(0, k) = sx;
    lp.eq_matrix(1, k) = sy;
    lp.eq_matrix(2, k) = static_cast<double>(k);

    const auto sol = convex::solve_lp(lp, 1e-12);
    RelintResult r;
    if (sol.status == convex::Status::infeasible) {
        // 0 is not even in the affine hull.
        r.margin = -std::numeric_limits<double>::infinity();
        return r;
    }
    if (sol.status != convex::Status::optimal) {
        throw SolverError(std::string("relative-interior LP failed: ") + convex::to_string(sol.status) + " after " +
                          std::to_string(sol.iterations) + " pivots; " + sol.message);
    }
    const double t = sol.primal(k);
    r.margin = t;
    r.boundary = std::fabs(t) <= tol::kBoundaryBand;
    r.in_relint = t > tol::kLp;
    if (t > 0.0) {
        r.weights.resize(points.size());
        double total = 0.0;
        for (Eigen::Index i = 0; i < k; ++i) {
            r.weights[static_cast<std::size_t>(i)] = sol.primal(i) + t;
            total += sol.primal(i) + t;
        }
        for (double& w : r.weights) w /= total;
    }
    return r;
}

bool phase_rank_is_one(const PhaseMatrix& theta) {
    // With nonzero entries, rank one is equivalent to every minor through row 0 and column 0 vanishing.
    const auto t00 = theta.unit(0, 0);
    for (std::size_t i = 1; i < theta.rows(); ++i) {
        const auto ti0 = theta.unit(i, 0);
        for (std::size_t j = 1; j < theta.cols(); ++j) {
            if (std::abs(t00 * theta.unit(i, j) - ti0 * theta.unit(0, j)) > tol::kMinor) return false;
        }
    }
    return true;
}

}  // namespace phaserank
