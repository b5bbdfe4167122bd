#include <doctest.h>

#include <cmath>

#include "fixtures.hpp"
#include "phaserank/errors.hpp"
#include "phaserank/scaling.hpp"

using namespace phaserank;

TEST_CASE("apply_scaling drops zero scalars") {
    ScalingVector y{{Angle{}, std::nullopt, Angle(kPi)}};
    const auto cols = apply_scaling(fixtures::intro3(), y);
    REQUIRE(cols.size() == 3);
    CHECK(cols[0].points.size() == 2);
    CHECK(cols[1].points[1] == Angle(kPi));
    CHECK_THROWS_AS(apply_scaling(fixtures::intro3(), ScalingVector{{std::nullopt, std::nullopt, std::nullopt}}),
                    DomainError);
    CHECK_THROWS_AS(apply_scaling(fixtures::intro3(), ScalingVector{{Angle{}}}), DomainError);
}

TEST_CASE("known scaling leaves every column noncolopsided") {
    const ScalingVector y{{Angle{}, Angle::from_pi_fraction(1, 4), Angle{}}};
    CHECK(scaling_is_noncolopsided(fixtures::scaled3(), y));
    CHECK_FALSE(scaling_is_noncolopsided(fixtures::scaled3(), ScalingVector{{Angle{}, Angle{}, Angle{}}}));
}

TEST_CASE("search finds a scaling, and is seed-deterministic") {
    ScalingSearchOptions o;
    o.seed = 11;
    const auto a = search_noncolopsided_scaling(fixtures::scaled3(), o);
    REQUIRE(a.has_value());
    CHECK(scaling_is_noncolopsided(fixtures::scaled3(), *a));
    const auto b = search_noncolopsided_scaling(fixtures::scaled3(), o);
    REQUIRE(b.has_value());
    for (std::size_t i = 0; i < 3; ++i) CHECK(a->scalars[i] == b->scalars[i]);
    // Covered torus: no scaling exists.
    CHECK_FALSE(search_noncolopsided_scaling(fixtures::covered3(), o).has_value());
    CHECK_THROWS_AS(search_noncolopsided_scaling(fixtures::signs3x4().transposed(), o), DomainError);
}

TEST_CASE("colop3 region") {
    CHECK(colop3_region_membership(Angle(0.1), Angle(0.2)));
    CHECK_FALSE(colop3_region_membership(Angle(2 * kPi / 3), Angle(4 * kPi / 3)));
    const auto r = colop3_region_raster(256);
    double count = 0;
    for (auto v : r) count += v;
    // Colopsided triples fill 3/4 of the torus.
    CHECK(count / static_cast<double>(r.size()) == doctest::Approx(0.75).epsilon(0.01));
}

TEST_CASE("coverage verdicts") {
    const auto first = coverage_check_3xm(fixtures::scaled3(), 128);
    CHECK(first.verdict == CoverageVerdict::rank_deficient_certified);
    REQUIRE(first.grid.witness.has_value());
    const auto [s, t] = *first.grid.witness;
    CHECK(scaling_is_noncolopsided(fixtures::scaled3(), ScalingVector{{Angle{}, s, t}}));

    const auto second = coverage_check_3xm(fixtures::covered3(), 128);
    CHECK(second.verdict == CoverageVerdict::full_rank_certified);
    CHECK(second.unresolved_cells == 0);
    CHECK(second.covered_cells == 128 * 128);

    CHECK(coverage_check_3xm(fixtures::signs3x4(), 64).verdict == CoverageVerdict::full_rank_certified);

    // A row-deleted submatrix of rank one fails the precondition.
    const auto degenerate = fixtures::inl("1,1,1;1,1,1;1,i,-1");
    const auto d = coverage_check_3xm(degenerate, 64);
    CHECK(d.verdict == CoverageVerdict::rank_deficient_certified);
    CHECK_FALSE(d.precondition_ok);
    CHECK(d.rank_one_after_deleting_row.has_value());

    CHECK_THROWS_AS(coverage_check_3xm(fixtures::intro3(), 4), DomainError);
    CHECK_THROWS_AS(coverage_check_3xm(fixtures::four_i(), 64), DomainError);
}

TEST_CASE("volume estimate") {
    CHECK(colop_volume_fraction(2, 1000, 1) == 1.0);
    const double f = colop_volume_fraction(4, 200000, 9);
    CHECK(std::fabs(f - 0.5) < 4 * std::sqrt(0.25 / 200000));
    CHECK(colop_volume_fraction(4, 1000, 3) == colop_volume_fraction(4, 1000, 3));
    CHECK_THROWS_AS(colop_volume_fraction(1, 10, 0), DomainError);
}

TEST_CASE("nonsingularity counting bound") {
    CHECK(nonsingularity_bound(7, 7).deficient_guaranteed);
    CHECK(nonsingularity_bound(7, 7).provenance == "counting");
    CHECK_FALSE(nonsingularity_bound(4, 4).deficient_guaranteed);
    CHECK(nonsingularity_bound(5, 5).deficient_guaranteed);
    CHECK(nonsingularity_bound(6, 6).provenance == "literature");
    CHECK(nonsingularity_bound(100, 100).deficient_guaranteed);
    CHECK_THROWS_AS(nonsingularity_bound(5, 4), DomainError);
}

TEST_CASE("sign rank maximality") {
    auto to_signs = [](const PhaseMatrix& m) {
        SignMatrix s{m.rows(), m.cols(), {}};
        for (Angle a : m.entries()) s.entries.push_back(a == Angle{} ? 1 : -1);
        return s;
    };
    CHECK(sign_rank_is_maximal(to_signs(fixtures::signs3x4())));
    CHECK_FALSE(sign_rank_is_maximal(to_signs(fixtures::sign6())));
    CHECK(sign_rank_is_maximal(SignMatrix{1, 1, {1}}));
    CHECK_FALSE(sign_rank_is_maximal(SignMatrix{2, 2, {1, 1, 1, 1}}));
    CHECK_THROWS_AS(sign_rank_is_maximal(SignMatrix{16, 16, std::vector<std::int8_t>(256, 1)}), CapacityError);
}

TEST_CASE("scaling examples") {
    const auto theta = fixtures::scaled3();
    const auto same = apply_scaling(theta, ScalingVector{{Angle{}, Angle{}, Angle{}}});
    for (std::size_t j = 0; j < 3; ++j) CHECK(same[j].points == theta.column(j));

    // Theta1 padded with a fourth column: its colopsided 3x3 block rules out any scaling.
    std::vector<Angle> e;
    const auto t1 = fixtures::theta1();
    for (std::size_t i = 0; i < 3; ++i) {
        for (std::size_t j = 0; j < 3; ++j) e.push_back(t1(i, j));
        e.push_back(Angle(0.4 * static_cast<double>(i)));
    }
    ScalingSearchOptions o;
    o.restarts = 64;
    CHECK_FALSE(search_noncolopsided_scaling(PhaseMatrix(3, 4, e), o).has_value());
    CHECK_FALSE(search_noncolopsided_scaling(PhaseMatrix::filled(1, 1), o).has_value());
}

TEST_CASE("colop3 region examples") {
    CHECK(colop3_region_membership(Angle{}, Angle{}));
    CHECK_FALSE(colop3_region_membership(Angle(2 * kPi / 3), Angle(4 * kPi / 3)));
    CHECK(colop3_region_membership(Angle(kPi / 2), Angle(kPi / 4)));
}

TEST_CASE("volume at a million samples") {
    CHECK(std::fabs(colop_volume_fraction(3, 1000000, 0) - 0.75) <= 0.002);
    CHECK(std::fabs(colop_volume_fraction(5, 1000000, 0) - 0.3125) <= 0.002);
}

TEST_CASE("more nonsingularity and sign cases") {
    CHECK(nonsingularity_bound(10, 50).deficient_guaranteed);

    // 4 x 8: all sign columns with leading +1.
    SignMatrix all{4, 8, std::vector<std::int8_t>(32)};
    for (std::size_t j = 0; j < 8; ++j)
        for (std::size_t i = 0; i < 4; ++i)
            all.entries[i * 8 + j] = static_cast<std::int8_t>(i == 0 ? 1 : (((j >> (i - 1)) & 1u) ? -1 : 1));
    CHECK(sign_rank_is_maximal(all));

    CHECK_FALSE(sign_rank_is_maximal(SignMatrix{3, 3, std::vector<std::int8_t>(9, 1)}));
    std::mt19937_64 rng(8);
    for (int k = 0; k < 50; ++k) {
        SignMatrix s{3, 3, {}};
        for (int e = 0; e < 9; ++e) s.entries.push_back(rng() & 1u ? 1 : -1);
        CHECK_FALSE(sign_rank_is_maximal(s));
    }
}
