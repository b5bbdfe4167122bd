#pragma once

#include <array>
#include <cstddef>
#include <optional>

#include <Eigen/Dense>

#include "phaserank/detvec.hpp"
#include "phaserank/phase_matrix.hpp"

namespace phaserank {

enum class Rank3Certificate { rank1, relint, colopsided };

const char* to_string(Rank3Certificate c);

struct Rank3Decision {
    int rank = 0;
    Rank3Certificate certificate = Rank3Certificate::colopsided;
    double lp_margin = 0.0;  // relint LP optimum on the monomial vector (0 for rank 1)
    bool boundary = false;   // lp_margin inside the boundary band
};

/// Exact phase rank of a 3x3 phase matrix. Throws DomainError for other shapes.
Rank3Decision decide_rank3(const PhaseMatrix& theta);

/// Positive weights c on the six monomials with sum_k c_k v_k = 0 and
/// c_1 c_2 c_3 = c_4 c_5 c_6.
///
/// When `rows_swapped` is set, the weights refer to the monomial vector of the
/// matrix with rows 0 and 1 exchanged (which swaps the even and odd triples).
struct CoefficientVector {
    std::array<double, 6> c{};
    bool rows_swapped = false;
};

/// Throws DomainError if v is not a 3x3 monomial vector or if the origin is not
/// in the relative interior of its points.
CoefficientVector find_balanced_coefficients(const DetMonomialVector& v);

/// The monomial vector of theta with rows 0 and 1 swapped, computed from v.
DetMonomialVector swap_first_rows(const DetMonomialVector& v);

struct WitnessMatrix {
    ComplexMatrix m;               // 3x3, largest modulus 1
    double det_residual = 0.0;     // |det m| / largest monomial modulus
    std::array<std::size_t, 3> row_permutation_applied{0, 1, 2};
};

/// The 6x9 incidence matrix: row k has ones at the entries (i, sigma_k(i)),
/// column index 3*i + j.
Eigen::Matrix<double, 6, 9> b_matrix();

/// Solves B m' = log c with the minimum-norm m' and returns exp(m') * theta,
/// normalized to largest modulus 1. Throws DomainError when the products of c
/// are unbalanced or when the result is not singular.
WitnessMatrix coefficients_to_witness(const PhaseMatrix& theta, const CoefficientVector& c);

/// A singular complex matrix with the phases of theta, or nullopt when theta has
/// phase rank 3.
std::optional<WitnessMatrix> witness_rank3(const PhaseMatrix& theta);

}  // namespace phaserank
