#include "phaserank/scaling.hpp"

#include <algorithm>
#include <random>

#include "phaserank/errors.hpp"

namespace phaserank {

std::vector<UnitPointSet> apply_scaling(const PhaseMatrix& theta, const ScalingVector& y) {
    if (y.scalars.size() != theta.rows()) {
        throw DomainError("scaling has " + std::to_string(y.scalars.size()) + " scalars for " +
                          std::to_string(theta.rows()) + " rows");
    }
    if (std::none_of(y.scalars.begin(), y.scalars.end(), [](const auto& s) { return s.has_value(); }))
        throw DomainError("scaling must have a nonzero scalar");
    std::vector<UnitPointSet> cols(theta.cols());
    for (std::size_t j = 0; j < theta.cols(); ++j)
        for (std::size_t i = 0; i < theta.rows(); ++i)
            if (y.scalars[i]) cols[j].points.push_back(*y.scalars[i] + theta(i, j));
    return cols;
}

bool scaling_is_noncolopsided(const PhaseMatrix& theta, const ScalingVector& y) {
    for (const auto& col : apply_scaling(theta, y))
        if (is_colopsided_gap(col)) return false;
    return true;
}

bool colop3_region_membership(Angle u, Angle v) {
    const Angle pts[3] = {Angle{}, u, v};
    return is_colopsided_gap(pts);
}

std::vector<std::uint8_t> colop3_region_raster(std::size_t resolution) {
    if (resolution == 0) throw DomainError("raster resolution must be positive");
    const double h = kTwoPi / static_cast<double>(resolution);
    std::vector<std::uint8_t> out(resolution * resolution);
    for (std::size_t j = 0; j < resolution; ++j)
        for (std::size_t i = 0; i < resolution; ++i)
            out[j * resolution + i] = colop3_region_membership(Angle((static_cast<double>(i) + 0.5) * h),
                                                               Angle((static_cast<double>(j) + 0.5) * h));
    return out;
}

double colop_volume_fraction(std::size_t n, std::size_t samples, std::uint64_t seed) {
    if (n < 2) throw DomainError("volume fraction needs n >= 2");
    if (samples == 0) throw DomainError("volume fraction needs at least one sample");
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> angle(0.0, kTwoPi);
    std::vector<Angle> pts(n);
    std::size_t hits = 0;
    for (std::size_t k = 0; k < samples; ++k) {
        for (auto& p : pts) p = Angle(angle(rng));
        hits += is_colopsided_gap(pts) ? 1 : 0;
    }
    return static_cast<double>(hits) / static_cast<double>(samples);
}

NonsingularityBound nonsingularity_bound(std::size_t n, std::size_t m) {
    if (n == 0 || n > m) throw DomainError("nonsingularity bound needs 1 <= n <= m");
    NonsingularityBound b;
    b.provenance = "counting";
    if (n - 1 >= 127) {
        b.deficient_guaranteed = true;  // n * m < 2^128 <= 2^(n-1)
    } else {
        const unsigned __int128 lhs = static_cast<unsigned __int128>(n) * m;
        b.deficient_guaranteed = lhs < (static_cast<unsigned __int128>(1) << (n - 1));
    }
    if (!b.deficient_guaranteed && n == m && (n == 5 || n == 6)) {
        b.deficient_guaranteed = true;
        b.provenance = "literature";
    }
    return b;
}

bool sign_rank_is_maximal(const SignMatrix& s) {
    if (s.entries.size() != s.rows * s.cols || s.rows == 0) throw DomainError("malformed sign matrix");
    if (s.rows > s.cols) throw DomainError("sign-rank maximality needs rows <= cols");
    if (s.rows > kMaxSignRows)
        throw CapacityError("sign-rank maximality enumerates 3^n scalings; n <= " + std::to_string(kMaxSignRows));
    for (auto e : s.entries)
        if (e < -1 || e > 1) throw DomainError("sign matrix entries must be -1, 0 or 1");

    const std::size_t n = s.rows;
    std::size_t total = 1;
    for (std::size_t i = 0; i < n; ++i) total *= 3;
    std::vector<int> y(n);
    for (std::size_t code = 1; code < total; ++code) {
        // Base-3 digits 0,1,2 map to 0,+1,-1; only scalings whose first nonzero entry is +1.
        std::size_t c = code;
        for (std::size_t i = 0; i < n; ++i, c /= 3) y[i] = c % 3 == 2 ? -1 : static_cast<int>(c % 3);
        const auto first = std::find_if(y.begin(), y.end(), [](int v) { return v != 0; });
        if (*first != 1) continue;

        bool some_unisigned = false;
        for (std::size_t j = 0; j < s.cols && !some_unisigned; ++j) {
            bool pos = false, neg = false;
            for (std::size_t i = 0; i < n; ++i) {
                const int v = y[i] * s(i, j);
                pos = pos || v > 0;
                neg = neg || v < 0;
            }
            some_unisigned = pos != neg;
        }
        if (!some_unisigned) return false;
    }
    return true;
}

}  // namespace phaserank
