#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "phaserank/phase_matrix.hpp"

namespace phaserank {

/// Largest singular value by one-sided complex Jacobi (off-diagonal threshold 1e-12).
double spectral_norm(const ComplexMatrix& a);

/// sqrt(nm) / ||theta||.
double forster_bound(const PhaseMatrix& theta);

/// Upper limit on n + m for the conic bounds (PSD block of size 2(n + m) <= 128).
inline constexpr std::size_t kMaxConicSide = 64;

/// min ||M|| over matrices with the phases of theta and moduli >= 1.
/// Throws CapacityError above kMaxConicSide, SolverError on non-convergence.
double min_norm_with_phases(const PhaseMatrix& theta, double tol = 1e-10);

/// sqrt(nm) / min_norm_with_phases(theta).
double forster_star_bound(const PhaseMatrix& theta, double tol = 1e-10);

/// Dual factorization norm gamma2*(theta) = max |<theta, B>| over gamma2(B) <= 1.
double gamma2_dual_norm(const PhaseMatrix& theta, double tol = 1e-10);

/// nm / gamma2*(theta).
double gamma2_star_bound(const PhaseMatrix& theta, double tol = 1e-10);

struct StructuralUpperBound {
    std::size_t k_star = 0;
    std::size_t bound = 0;
    std::size_t lambert_lower = 0;
    std::size_t lambert_upper = 0;
};

/// k_star is the least k >= 2 with m * k < 2^(k-1); bound = n - floor((n-1)/(k_star-1)).
/// The Lambert-W estimate brackets k_star. Throws DomainError unless 1 <= n <= m.
StructuralUpperBound structural_upper_bound(std::size_t n, std::size_t m);

struct AnalyzeOptions {
    bool forster = true;
    bool forster_star = true;
    bool gamma2 = true;
    bool upper = true;
    std::size_t coverage_resolution = 512;
    double conic_tol = 1e-10;
};

struct RankReport {
    std::size_t n = 0;
    std::size_t m = 0;
    std::optional<double> forster_lb;
    std::optional<double> forster_star_lb;
    std::optional<double> gamma2_lb;
    std::size_t ceil_lb = 1;
    std::optional<std::size_t> structural_ub;
    std::optional<std::size_t> k_star;
    std::size_t combined_ub = 0;  // best upper bound from every method that ran
    std::optional<std::size_t> exact;
    bool rank_one = false;
    std::optional<bool> colopsided;          // square matrices with n <= 8
    std::optional<std::size_t> colopsided_minor_lb;  // largest colopsided 3x3 submatrix found
    std::optional<std::string> coverage_verdict;
    std::optional<bool> sign_rank_maximal;   // +-1 matrices only
    bool boundary = false;
    bool inconsistent = false;
    std::map<std::string, std::string> provenance;  // field -> method
    std::map<std::string, std::string> errors;      // field -> failure message
    std::vector<std::string> notes;
    bool solver_failed = false;
};

RankReport analyze(const PhaseMatrix& theta, const AnalyzeOptions& opts = {});

/// Literature facts about a matrix, found by matching against a small catalog up
/// to row/column permutations, phase scalings and transposition.
std::optional<std::string> known_matrix_note(const PhaseMatrix& theta);

}  // namespace phaserank
