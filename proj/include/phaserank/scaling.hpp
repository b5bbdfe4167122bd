#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "phaserank/angle.hpp"
#include "phaserank/colop.hpp"
#include "phaserank/phase_matrix.hpp"

namespace phaserank {

/// One scalar per row; std::nullopt stands for the scalar 0.
struct ScalingVector {
    std::vector<std::optional<Angle>> scalars;
};

/// Column j becomes {y_i * theta(i, j) : y_i != 0}.
/// Throws DomainError on a length mismatch or an all-zero scaling.
std::vector<UnitPointSet> apply_scaling(const PhaseMatrix& theta, const ScalingVector& y);

/// True when no column of theta scaled by y is colopsided.
bool scaling_is_noncolopsided(const PhaseMatrix& theta, const ScalingVector& y);

struct ScalingSearchOptions {
    std::size_t restarts = 16;
    std::uint64_t seed = 0;
    int sweeps = 200;
    double hinge_shift = 0.01;  // columns are pushed to gap <= pi - hinge_shift
};

/// Randomized coordinate descent for a scaling that leaves every column
/// noncolopsided. A returned scaling is re-verified with the exact oracle;
/// nullopt proves nothing. Throws DomainError unless rows <= cols.
std::optional<ScalingVector> search_noncolopsided_scaling(const PhaseMatrix& theta,
                                                          const ScalingSearchOptions& opts = {});

/// {1, e^{iu}, e^{iv}} is colopsided.
bool colop3_region_membership(Angle u, Angle v);

/// Membership at cell centers ((i + 0.5) h, (j + 0.5) h), h = 2pi / resolution,
/// stored at index j * resolution + i (u along i, v along j).
std::vector<std::uint8_t> colop3_region_raster(std::size_t resolution);

enum class CellStatus : std::uint8_t { certified_covered, uncovered_witness, unresolved };
const char* to_string(CellStatus s);

/// Grid over (s, t) in [0, 2pi)^2 for the scaled columns {theta_1j, e^{is} theta_2j, e^{it} theta_3j}.
/// Cell (i, j) has center ((i + 0.5) h, (j + 0.5) h) and is stored at j * resolution + i.
struct TorusGrid {
    std::size_t resolution = 0;
    std::vector<CellStatus> cells;
    std::optional<std::pair<Angle, Angle>> witness;  // (s, t) leaving every column noncolopsided

    [[nodiscard]] double cell_width() const { return kTwoPi / static_cast<double>(resolution); }
    [[nodiscard]] CellStatus at(std::size_t i, std::size_t j) const { return cells[j * resolution + i]; }
};

enum class CoverageVerdict { rank_deficient_certified, full_rank_certified, unresolved };
const char* to_string(CoverageVerdict v);

struct CoverageCertificate {
    CoverageVerdict verdict = CoverageVerdict::unresolved;
    TorusGrid grid;
    bool precondition_ok = false;
    std::optional<std::size_t> rank_one_after_deleting_row;  // set when the precondition fails
    std::size_t covered_cells = 0;
    std::size_t witness_cells = 0;
    std::size_t unresolved_cells = 0;
    std::size_t refined_cells = 0;
    double min_covered_slack = 0.0;  // min over covered cells of (best margin - L h / 2), at the finest level used
};

inline constexpr double kGapLipschitz = 2.0;
inline constexpr std::size_t kDefaultResolution = 512;

/// Certified raster test of whether the translated colopsided-triple regions of the
/// columns cover the torus. Throws DomainError unless theta is 3 x m with
/// m >= 3 and resolution >= 8.
CoverageCertificate coverage_check_3xm(const PhaseMatrix& theta, std::size_t resolution = kDefaultResolution);

/// Monte-Carlo fraction of uniform random n-tuples of phases that are colopsided.
/// Throws DomainError when n < 2 or samples == 0.
double colop_volume_fraction(std::size_t n, std::size_t samples, std::uint64_t seed);

struct NonsingularityBound {
    bool deficient_guaranteed = false;
    std::string provenance;  // "counting" or "literature"
};

/// Every n x m phase matrix is rank deficient when m * n < 2^(n-1); the square
/// sizes 5 and 6 are deficient by published results. Throws DomainError unless 1 <= n <= m.
NonsingularityBound nonsingularity_bound(std::size_t n, std::size_t m);

/// Matrix with entries in {-1, 0, 1}, row-major.
struct SignMatrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<std::int8_t> entries;

    [[nodiscard]] int operator()(std::size_t i, std::size_t j) const { return entries[i * cols + j]; }
};

inline constexpr std::size_t kMaxSignRows = 15;

/// True iff every nonzero scaling of the rows by {-1, 0, 1} leaves some column
/// unisigned (nonzero, and without two entries of opposite sign).
/// Throws DomainError unless rows <= cols, CapacityError when rows > 15.
bool sign_rank_is_maximal(const SignMatrix& s);

}  // namespace phaserank
