#pragma once

#include <span>
#include <vector>

#include "phaserank/angle.hpp"
#include "phaserank/phase_matrix.hpp"

namespace phaserank {

enum class PointLabel { none, red, blue };

/// An ordered sequence of unit complex numbers, optionally tagged.
struct UnitPointSet {
    std::vector<Angle> points;
    std::vector<PointLabel> labels;  // empty, or one label per point
};

/// Outcome of the relative-interior LP
///   max t  s.t.  sum_k w_k p_k = 0,  sum_k w_k = 1,  w_k >= t.
struct RelintResult {
    bool in_relint = false;
    std::vector<double> weights;  // convex weights, filled whenever margin > 0 (always when in_relint)
    double margin = 0.0;          // optimal t; -infinity when the LP is infeasible
    bool boundary = false;        // margin within the boundary band around 0
};

/// Largest arc between consecutive points, sorted around the circle.
/// A single point (or all-coincident points) gives 2pi.
double largest_circular_gap(std::span<const Angle> points);

/// largest_circular_gap - pi. Positive means the points lie in an open half-plane.
double gap_margin(std::span<const Angle> points);

/// True iff the origin is not in the relative interior of the convex hull.
///
/// Points that all lie on one line through the origin are colopsided exactly
/// when they all point the same way. Otherwise the set is colopsided iff the
/// largest circular gap is at least pi (up to tol::kAngle).
bool is_colopsided_gap(std::span<const Angle> points);
inline bool is_colopsided_gap(const UnitPointSet& s) { return is_colopsided_gap(s.points); }

/// LP test of the same property; also returns strictly positive weights when
/// the origin is in the relative interior.
RelintResult relint_contains_origin(std::span<const Angle> points);
inline RelintResult relint_contains_origin(const UnitPointSet& s) { return relint_contains_origin(s.points); }

/// Phase rank one, i.e. every 2x2 minor of the unit-entry matrix vanishes.
bool phase_rank_is_one(const PhaseMatrix& theta);

}  // namespace phaserank
