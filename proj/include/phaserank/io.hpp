#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "phaserank/phase_matrix.hpp"
#include "phaserank/scaling.hpp"

namespace phaserank::io {

using nlohmann::json;

/// Accepts {"angles": [[radians]]}, {"angles_pi": [["p/q" | number]]} or
/// {"signs": [[1, -1]]}, with optional "rows"/"cols" checked against the grid.
/// Throws DomainError on malformed input.
PhaseMatrix phase_matrix_from_json(const json& j);
PhaseMatrix parse_phase_matrix(std::string_view text);

/// Inline rows separated by ';', entries by ','. Entries: 1, -1, i, -i,
/// e^{i p pi/q} (p, q integers, p may be negative or omitted), optionally negated.
PhaseMatrix parse_inline_matrix(std::string_view text);

/// One unit-complex literal of the inline grammar.
Angle parse_phase_literal(std::string_view text);

/// A matrix with free slots named t1, t2, t3 in place of some entries.
struct MatrixTemplate {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<Angle> fixed;     // row-major; value unused where slot >= 0
    std::vector<int> slot;        // -1 for fixed entries, else 0-based slot index
    std::size_t slot_count = 0;

    [[nodiscard]] PhaseMatrix fill(const std::vector<double>& values) const;
};

/// Inline grammar or JSON "angles_pi", with the extra literals t1, t2, t3.
MatrixTemplate parse_template(std::string_view text);

json to_json(const PhaseMatrix& m);
json to_json(const ComplexMatrix& m);  // [[[re, im], ...], ...]
ComplexMatrix complex_matrix_from_json(const json& j);
json to_json(const ScalingVector& y);  // angles in radians, null for zero scalars

/// Half-even rounding to `digits` decimals, as used for reported bound values.
double round_half_even(double x, int digits);

}  // namespace phaserank::io
