#include <algorithm>
#include <cmath>
#include <limits>

#include "phaserank/errors.hpp"
#include "phaserank/kernels/kernels.hpp"
#include "phaserank/scaling.hpp"
#include "phaserank/tolerances.hpp"

namespace phaserank {

namespace {

constexpr std::size_t kRefine = 4;

struct ColumnOffsets {
    std::vector<double> a;  // theta_2j - theta_1j
    std::vector<double> b;  // theta_3j - theta_1j
};

ColumnOffsets offsets(const PhaseMatrix& theta) {
    ColumnOffsets o;
    for (std::size_t j = 0; j < theta.cols(); ++j) {
        o.a.push_back((theta(1, j) - theta(0, j)).radians());
        o.b.push_back((theta(2, j) - theta(0, j)).radians());
    }
    return o;
}

bool exact_witness(const PhaseMatrix& theta, double s, double t) {
    ScalingVector y;
    y.scalars = {Angle{}, Angle(s), Angle(t)};
    return scaling_is_noncolopsided(theta, y);
}

}  // namespace

const char* to_string(CellStatus s) {
    switch (s) {
        case CellStatus::certified_covered: return "covered";
        case CellStatus::uncovered_witness: return "witness";
        case CellStatus::unresolved: return "unresolved";
    }
    return "?";
}

const char* to_string(CoverageVerdict v) {
    switch (v) {
        case CoverageVerdict::rank_deficient_certified: return "rank_deficient_certified";
        case CoverageVerdict::full_rank_certified: return "full_rank_certified";
        case CoverageVerdict::unresolved: return "unresolved";
    }
    return "?";
}

CoverageCertificate coverage_check_3xm(const PhaseMatrix& theta, std::size_t resolution) {
    if (theta.rows() != 3 || theta.cols() < 3) {
        throw DomainError("coverage check needs a 3 x m phase matrix with m >= 3, got " +
                          std::to_string(theta.rows()) + "x" + std::to_string(theta.cols()));
    }
    if (resolution < 8) throw DomainError("coverage resolution must be at least 8");

    CoverageCertificate cert;
    cert.grid.resolution = resolution;
    cert.precondition_ok = true;
    for (std::size_t r = 0; r < 3; ++r) {
        if (phase_rank_is_one(theta.without_row(r))) {
            cert.precondition_ok = false;
            cert.rank_one_after_deleting_row = r;
            cert.verdict = CoverageVerdict::rank_deficient_certified;
            return cert;
        }
    }

    const auto off = offsets(theta);
    const auto& k = kernels::active_kernels();
    const std::size_t m = theta.cols();
    const double h = kTwoPi / static_cast<double>(resolution);
    const double need = kGapLipschitz * h / 2.0;

    std::vector<double> s(resolution), margin(resolution);
    for (std::size_t i = 0; i < resolution; ++i) s[i] = (static_cast<double>(i) + 0.5) * h;

    cert.grid.cells.assign(resolution * resolution, CellStatus::unresolved);
    cert.min_covered_slack = std::numeric_limits<double>::infinity();
    double best_witness = std::numeric_limits<double>::infinity();
    // Margin <= -kAngle already means no column is colopsided; the exact oracle re-checks it.
    auto consider_witness = [&](double value, double ss, double tt) {
        if (!exact_witness(theta, ss, tt)) return false;
        if (value < best_witness) {
            best_witness = value;
            cert.grid.witness = std::make_pair(Angle(ss), Angle(tt));
        }
        return true;
    };

    // Sub-cell scratch for one refinement.
    const double hs = h / kRefine;
    const double need_sub = kGapLipschitz * hs / 2.0;
    std::vector<double> sub_s(kRefine), sub_margin(kRefine);

    for (std::size_t j = 0; j < resolution; ++j) {
        const double t = (static_cast<double>(j) + 0.5) * h;
        k.gap_margin_row(off.a.data(), off.b.data(), m, s.data(), t, resolution, margin.data());
        for (std::size_t i = 0; i < resolution; ++i) {
            auto& cell = cert.grid.cells[j * resolution + i];
            if (margin[i] > need) {
                cell = CellStatus::certified_covered;
                cert.min_covered_slack = std::min(cert.min_covered_slack, margin[i] - need);
                continue;
            }
            if (margin[i] <= -tol::kAngle && consider_witness(margin[i], s[i], t)) {
                cell = CellStatus::uncovered_witness;
                continue;
            }
            // One level of 4 x 4 refinement.
            ++cert.refined_cells;
            bool all_covered = true, witness = false;
            double slack = std::numeric_limits<double>::infinity();
            const double s0 = static_cast<double>(i) * h, t0 = static_cast<double>(j) * h;
            for (std::size_t b = 0; b < kRefine; ++b) {
                const double tt = t0 + (static_cast<double>(b) + 0.5) * hs;
                for (std::size_t a = 0; a < kRefine; ++a) sub_s[a] = s0 + (static_cast<double>(a) + 0.5) * hs;
                k.gap_margin_row(off.a.data(), off.b.data(), m, sub_s.data(), tt, kRefine, sub_margin.data());
                for (std::size_t a = 0; a < kRefine; ++a) {
                    if (sub_margin[a] > need_sub) {
                        slack = std::min(slack, sub_margin[a] - need_sub);
                        continue;
                    }
                    all_covered = false;
                    if (sub_margin[a] <= -tol::kAngle && consider_witness(sub_margin[a], sub_s[a], tt)) witness = true;
                }
            }
            if (witness) {
                cell = CellStatus::uncovered_witness;
            } else if (all_covered) {
                cell = CellStatus::certified_covered;
                cert.min_covered_slack = std::min(cert.min_covered_slack, slack);
            }
        }
    }

    for (auto c : cert.grid.cells) {
        switch (c) {
            case CellStatus::certified_covered: ++cert.covered_cells; break;
            case CellStatus::uncovered_witness: ++cert.witness_cells; break;
            case CellStatus::unresolved: ++cert.unresolved_cells; break;
        }
    }
    if (cert.grid.witness) {
        cert.verdict = CoverageVerdict::rank_deficient_certified;
    } else if (cert.unresolved_cells == 0) {
        cert.verdict = CoverageVerdict::full_rank_certified;
    }
    if (cert.covered_cells == 0) cert.min_covered_slack = 0.0;
    return cert;
}

}  // namespace phaserank
