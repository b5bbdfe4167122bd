#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "phaserank/angle.hpp"
#include "phaserank/phase_matrix.hpp"

namespace phaserank {

inline constexpr std::size_t kMaxDetVectorSize = 8;

struct DetTerm {
    std::vector<std::uint8_t> permutation;  // row i uses column permutation[i]
    int sign = 1;                           // parity of the permutation
    Angle phase;                            // phase of sign * prod_i theta(i, permutation[i])
};

/// All n! signed monomials of det(theta), each as a point of the unit circle.
///
/// Terms are in lexicographic permutation order, except for n = 3 where the
/// order is identity, the two 3-cycles (1 2 0) and (2 0 1), then the
/// transpositions (0 2 1), (1 0 2), (2 1 0): the three even ("red") terms
/// first and the three odd ("blue") terms last.
struct DetMonomialVector {
    std::size_t n = 0;
    std::vector<DetTerm> terms;

    [[nodiscard]] std::vector<Angle> phases() const;
    [[nodiscard]] std::complex<double> sum() const;
    /// Index of the term using `permutation`.
    [[nodiscard]] std::size_t index_of(const std::vector<std::uint8_t>& permutation) const;
};

/// Throws DomainError when theta is not square, CapacityError when n > 8.
DetMonomialVector det_monomial_vector(const PhaseMatrix& theta);

/// The determinant is colopsided at theta, which certifies phase rank n.
bool matrix_is_colopsided(const PhaseMatrix& theta);

struct HullPoint {
    std::complex<double> point;
    std::size_t multiplicity = 0;
    bool is_hull_vertex = false;
};

struct HullPlotData {
    std::vector<HullPoint> points;       // distinct monomial points, ordered by angle
    std::vector<std::size_t> hull_cycle; // counterclockwise indices into points
};

/// Monomial points merged within tol::kDedup, with multiplicities and the hull cycle.
HullPlotData hull_plot_data(const PhaseMatrix& theta);

}  // namespace phaserank
