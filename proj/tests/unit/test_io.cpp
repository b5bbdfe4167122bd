#include <doctest.h>

#include "fixtures.hpp"
#include "phaserank/errors.hpp"
#include "phaserank/io.hpp"

using namespace phaserank;
using io::json;

TEST_CASE("phase literals") {
    CHECK(io::parse_phase_literal("1") == Angle{});
    CHECK(io::parse_phase_literal("-1") == Angle(kPi));
    CHECK(io::parse_phase_literal("-i") == Angle::from_pi_fraction(3, 2));
    CHECK(io::parse_phase_literal("e^{i pi/3}") == Angle::from_pi_fraction(1, 3));
    CHECK(io::parse_phase_literal("e^{-i2pi/3}") == Angle::from_pi_fraction(-2, 3));
    CHECK(io::parse_phase_literal("-e^{i pi/4}") == Angle::from_pi_fraction(5, 4));
    CHECK(io::parse_phase_literal("e^{iπ}") == Angle(kPi));
    CHECK_THROWS_AS(io::parse_phase_literal("2"), DomainError);
    CHECK_THROWS_AS(io::parse_phase_literal("e^{i pi/0}"), DomainError);
    CHECK_THROWS_AS(io::parse_phase_literal(""), DomainError);
}

TEST_CASE("inline matrices") {
    const auto m = io::parse_inline_matrix("1,1,1;1,i,-i;1,1,i");
    CHECK(m.rows() == 3);
    CHECK(m(1, 2) == Angle::from_pi_fraction(3, 2));
    CHECK_THROWS_AS(io::parse_inline_matrix("1,1;1"), DomainError);
    CHECK_THROWS_AS(io::parse_inline_matrix(""), DomainError);
}

TEST_CASE("json input forms") {
    const auto a = io::parse_phase_matrix(R"({"angles_pi": [["0", "1/2"], [1, "-1/2"]]})");
    CHECK(a(0, 1) == Angle::from_pi_fraction(1, 2));
    CHECK(a(1, 0) == Angle(kPi));
    CHECK(a(1, 1) == Angle::from_pi_fraction(3, 2));
    const auto s = io::parse_phase_matrix(R"({"signs": [[1, -1], [-1, 1]]})");
    CHECK(s(0, 1) == Angle(kPi));
    const auto r = io::parse_phase_matrix(R"({"rows": 1, "cols": 2, "angles": [[0.5, 7.0]]})");
    CHECK(r(0, 1).radians() == doctest::Approx(7.0 - kTwoPi));
    CHECK_THROWS_AS(io::parse_phase_matrix(R"({"rows": 2, "angles": [[0.5, 7.0]]})"), DomainError);
    CHECK_THROWS_AS(io::parse_phase_matrix(R"({"signs": [[1, 0]]})"), DomainError);
    CHECK_THROWS_AS(io::parse_phase_matrix(R"({"angles": [[0.5], [1, 2]]})"), DomainError);
    CHECK_THROWS_AS(io::parse_phase_matrix("not json"), DomainError);
    CHECK_THROWS_AS(io::parse_phase_matrix(R"({"angles_pi": [["1/0"]]})"), DomainError);
}

TEST_CASE("json round trip") {
    const auto m = fixtures::theta3();
    CHECK(io::phase_matrix_from_json(io::to_json(m)) == m);
    const auto c = m.to_complex();
    CHECK((io::complex_matrix_from_json(io::to_json(c)) - c).norm() == 0.0);
    const ScalingVector y{{Angle{}, std::nullopt}};
    CHECK(io::to_json(y) == json::parse("[0.0, null]"));
}

TEST_CASE("templates") {
    const auto t = io::parse_template("1,1,1;1,t1,t2;1,t3,e^{i pi/3}");
    CHECK(t.slot_count == 3);
    const auto m = t.fill({0.5, 1.0, 1.5});
    CHECK(m(1, 1).radians() == doctest::Approx(0.5));
    CHECK(m(2, 1).radians() == doctest::Approx(1.5));
    CHECK(io::parse_template("1,t2;t1,1").slot_count == 2);
    CHECK_THROWS_AS(io::parse_template("1,t2;1,1"), DomainError);  // t2 without t1
    CHECK_THROWS_AS((void)t.fill({0.5}), DomainError);
}

TEST_CASE("half-even rounding") {
    CHECK(io::round_half_even(1.79902923, 4) == 1.799);
    CHECK(io::round_half_even(0.00125, 4) == 0.0012);
    CHECK(io::round_half_even(0.00135, 4) == 0.0014);
    CHECK(io::round_half_even(-2.5, 0) == -2.0);
}
