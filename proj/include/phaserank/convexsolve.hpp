#pragma once

// Small dense LP and SDP solvers. Sizes are desk scale: tens of variables for
// the LP, PSD blocks up to 128 in total dimension for the SDP.

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace phaserank::convex {

enum class Status { optimal, infeasible, unbounded, numerical_failure };

const char* to_string(Status s);

struct SolveStatus {
    Status status = Status::numerical_failure;
    double objective = 0.0;        // primal objective at the returned point
    Eigen::VectorXd primal;        // LP: x. SDP: the LP-block part of X.
    Eigen::VectorXd dual;          // multipliers of the equality constraints
    double duality_gap = 0.0;      // |primal obj - dual obj| (relative for the SDP)
    double primal_residual = 0.0;
    int iterations = 0;
    Eigen::VectorXd certificate;   // Farkas vector (infeasible) or recession ray (unbounded)
    std::string message;
};

/// minimize objective . x  subject to  eq_matrix x = eq_rhs,  x >= lower.
/// Entries of `lower` may be -infinity (free variable).
struct LinearProgram {
    Eigen::VectorXd objective;
    Eigen::MatrixXd eq_matrix;
    Eigen::VectorXd eq_rhs;
    Eigen::VectorXd lower;
};

inline constexpr std::size_t kMaxLpVariables = 64;
inline constexpr std::size_t kMaxLpConstraints = 64;
inline constexpr int kLpIterationCap = 500;

/// Two-phase dense-tableau simplex with Bland's rule.
/// Throws DomainError on inconsistent dimensions, CapacityError above the size caps.
SolveStatus solve_lp(const LinearProgram& p, double tol = 1e-9);

/// One nonzero of a constraint or objective matrix. For PSD blocks the entry
/// (row, col) stands for both (row, col) and (col, row). `block` indexes
/// `psd_sizes`, or is kLpBlock for the nonnegative-orthant block.
struct BlockEntry {
    int block;
    int row;
    int col;
    double value;
};
inline constexpr int kLpBlock = -1;

using BlockMatrix = std::vector<BlockEntry>;

/// minimize <C, X>  s.t.  <A_i, X> = b_i,  X = (x_lp >= 0, X_1 psd, ..., X_k psd).
/// The dual is  maximize b.y  s.t.  C - sum_i y_i A_i = S in the same cone.
struct ConicProgram {
    std::size_t lp_size = 0;
    std::vector<std::size_t> psd_sizes;
    BlockMatrix objective;
    std::vector<BlockMatrix> constraints;
    Eigen::VectorXd rhs;
};

struct SdpIterate {
    int iteration = 0;
    double primal_objective = 0.0;
    double dual_objective = 0.0;
    double complementarity = 0.0;  // <X, S>
    double primal_infeasibility = 0.0;
    double dual_infeasibility = 0.0;
    double residual_slack = 0.0;   // |y.Rp| + |<Rd, X>|, bounds how far pobj - dobj may drop below <X,S>
};

struct ConicSolution : SolveStatus {
    double dual_objective = 0.0;
    Eigen::VectorXd lp_slack;              // s for the LP block
    std::vector<Eigen::MatrixXd> x_blocks; // primal PSD blocks
    std::vector<Eigen::MatrixXd> s_blocks; // dual slack PSD blocks
    std::vector<SdpIterate> history;
};

struct SdpOptions {
    int max_iterations = 100;
    std::ostream* iterate_log = nullptr;  // CSV, one row per iteration
};

inline constexpr std::size_t kMaxPsdDimension = 128;

/// Infeasible primal-dual path following with Nesterov-Todd scaling and
/// Mehrotra predictor-corrector steps. Deterministic for identical inputs.
ConicSolution solve_sdp(const ConicProgram& p, double tol = 1e-8, const SdpOptions& opts = {});

/// Smallest eigenvalue check via Cholesky of (M + shift*I); used to re-verify solutions.
bool psd_with_shift(const Eigen::MatrixXd& m, double shift = 1e-8);

}  // namespace phaserank::convex
