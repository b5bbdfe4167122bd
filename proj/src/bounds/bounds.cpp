#include <cmath>
#include <string>

#include "phaserank/bounds.hpp"
#include "phaserank/convexsolve.hpp"
#include "phaserank/errors.hpp"

namespace phaserank {

namespace {

using convex::BlockEntry;
using convex::BlockMatrix;

void check_conic_size(const PhaseMatrix& theta) {
    if (theta.rows() + theta.cols() > kMaxConicSide) {
        throw CapacityError("conic bounds need rows + cols <= " + std::to_string(kMaxConicSide) + ", got " +
                            std::to_string(theta.rows() + theta.cols()));
    }
}

// Entries of the real embedding [[Re H, -Im H], [Im H, Re H]] contributed by
// H(i, n + j) = scale * theta(i, j) and its conjugate mirror. N = n + m.
void push_embedded(BlockMatrix& out, const PhaseMatrix& theta, std::size_t i, std::size_t j, double scale) {
    const int n = static_cast<int>(theta.rows());
    const int big = n + static_cast<int>(theta.cols());
    const int r = static_cast<int>(i), c = n + static_cast<int>(j);
    const auto z = theta.unit(i, j) * scale;
    out.push_back({0, r, c, z.real()});
    out.push_back({0, big + r, big + c, z.real()});
    out.push_back({0, big + r, c, z.imag()});
    out.push_back({0, r, big + c, -z.imag()});
}

convex::ConicSolution solve_or_throw(const convex::ConicProgram& p, double tol, const char* what) {
    auto sol = convex::solve_sdp(p, tol);
    if (sol.status != convex::Status::optimal) {
        throw SolverError(std::string(what) + ": " + convex::to_string(sol.status) + " after " +
                          std::to_string(sol.iterations) + " iterations (relative gap " +
                          std::to_string(sol.duality_gap) + ", primal residual " +
                          std::to_string(sol.primal_residual) + ") " + sol.message);
    }
    return sol;
}

}  // namespace

double min_norm_with_phases(const PhaseMatrix& theta, double tol) {
    check_conic_size(theta);
    const std::size_t n = theta.rows(), m = theta.cols();
    const int dim = static_cast<int>(2 * (n + m));

    // Dual variables y = (t, r_ij); maximize -t subject to
    //   t I + sum r_ij emb(E_ij theta_ij) >= 0  and  r_ij - 1 >= 0.
    convex::ConicProgram p;
    p.lp_size = n * m;
    p.psd_sizes = {static_cast<std::size_t>(dim)};
    p.rhs = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(1 + n * m));
    p.rhs(0) = -1.0;
    BlockMatrix at;
    for (int k = 0; k < dim; ++k) at.push_back({0, k, k, -1.0});
    p.constraints.push_back(std::move(at));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < m; ++j) {
            const int lp = static_cast<int>(i * m + j);
            p.objective.push_back({convex::kLpBlock, lp, 0, -1.0});
            BlockMatrix a;
            push_embedded(a, theta, i, j, -1.0);
            a.push_back({convex::kLpBlock, lp, 0, -1.0});
            p.constraints.push_back(std::move(a));
        }
    }
    const auto sol = solve_or_throw(p, tol, "norm minimization over moduli");
    return -0.5 * (sol.objective + sol.dual_objective);
}

double forster_star_bound(const PhaseMatrix& theta, double tol) {
    const double nm = static_cast<double>(theta.rows()) * static_cast<double>(theta.cols());
    return std::sqrt(nm) / min_norm_with_phases(theta, tol);
}

double gamma2_dual_norm(const PhaseMatrix& theta, double tol) {
    check_conic_size(theta);
    const std::size_t n = theta.rows(), m = theta.cols();
    const int dim = static_cast<int>(2 * (n + m));

    // max <emb(H/2), W>  s.t.  W >= 0, diag(W) = 1,  H = [[0, theta], [theta^H, 0]].
    // The optimum equals tr(H Z) over Hermitian Z >= 0 with unit diagonal, i.e. 2 gamma2*.
    convex::ConicProgram p;
    p.psd_sizes = {static_cast<std::size_t>(dim)};
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < m; ++j) push_embedded(p.objective, theta, i, j, -0.5);
    p.rhs = Eigen::VectorXd::Ones(dim);
    for (int k = 0; k < dim; ++k) p.constraints.push_back({BlockEntry{0, k, k, 1.0}});
    const auto sol = solve_or_throw(p, tol, "factorization-norm program");
    return -0.25 * (sol.objective + sol.dual_objective);
}

double gamma2_star_bound(const PhaseMatrix& theta, double tol) {
    const double nm = static_cast<double>(theta.rows()) * static_cast<double>(theta.cols());
    return nm / gamma2_dual_norm(theta, tol);
}

StructuralUpperBound structural_upper_bound(std::size_t n, std::size_t m) {
    if (n == 0 || n > m) throw DomainError("structural upper bound needs 1 <= n <= m");
    StructuralUpperBound r;
    for (std::size_t k = 2;; ++k) {
        // k stays far below 128 since m < 2^64.
        const unsigned __int128 lhs = static_cast<unsigned __int128>(m) * k;
        if (lhs < (static_cast<unsigned __int128>(1) << (k - 1))) {
            r.k_star = k;
            break;
        }
    }
    r.bound = n - (n - 1) / (r.k_star - 1);
    const double u = std::log(static_cast<double>(m)) + std::log(2.0) - std::log(std::log(2.0)) - 1.0;
    const double root = std::sqrt(2.0 * u);
    r.lambert_upper = static_cast<std::size_t>(std::ceil((1.0 + root + u) / std::log(2.0)));
    r.lambert_lower = static_cast<std::size_t>(std::ceil((1.0 + root + 2.0 * u / 3.0) / std::log(2.0)));
    return r;
}

}  // namespace phaserank
