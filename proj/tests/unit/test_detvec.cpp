#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "phaserank/detvec.hpp"
#include "phaserank/errors.hpp"

using namespace phaserank;

namespace {
void check_phases(const PhaseMatrix& m, std::initializer_list<double> pi_units) {
    const auto v = det_monomial_vector(m);
    REQUIRE(v.terms.size() == pi_units.size());
    std::size_t k = 0;
    for (double u : pi_units) {
        CHECK_MESSAGE(circular_distance(v.terms[k].phase, Angle(u * kPi)) < 1e-12, "term ", k);
        ++k;
    }
}
}  // namespace

TEST_CASE("3x3 term order: even terms first") {
    const auto v = det_monomial_vector(PhaseMatrix::filled(3, 3));
    const std::vector<std::vector<std::uint8_t>> order = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1},
                                                          {0, 2, 1}, {1, 0, 2}, {2, 1, 0}};
    for (std::size_t k = 0; k < 6; ++k) {
        CHECK(v.terms[k].permutation == order[k]);
        CHECK(v.terms[k].sign == (k < 3 ? 1 : -1));
    }
    CHECK(v.index_of({1, 0, 2}) == 4);
}

TEST_CASE("hand-computed monomial vectors") {
    check_phases(fixtures::theta1(), {1.5, 1.5, 1.5, 0.0, 1.75, 1.75});
    check_phases(fixtures::theta2(), {1.5, 0.5, 0.5, 0.0, 0.0, 1.5});
    check_phases(fixtures::theta3(), {1.0, 1.0 / 3, 1.0 / 3, 5.0 / 3, 1.5, 1.5});
}

TEST_CASE("lexicographic order and size cap") {
    const auto v = det_monomial_vector(PhaseMatrix::filled(4, 4));
    CHECK(v.terms.size() == 24);
    CHECK(v.terms.front().permutation == std::vector<std::uint8_t>{0, 1, 2, 3});
    CHECK(v.terms.back().permutation == std::vector<std::uint8_t>{3, 2, 1, 0});
    CHECK(v.terms[1].sign == -1);
    CHECK(det_monomial_vector(PhaseMatrix::filled(8, 8)).terms.size() == 40320);
    CHECK_THROWS_AS(det_monomial_vector(PhaseMatrix::filled(9, 9)), CapacityError);
    CHECK_THROWS_AS(det_monomial_vector(PhaseMatrix::filled(2, 3)), DomainError);
}

TEST_CASE("monomials sum to the determinant") {
    std::mt19937_64 rng(17);
    for (std::size_t n = 1; n <= 6; ++n) {
        const auto m = fixtures::random_matrix(n, n, rng);
        const auto d = m.to_complex().determinant();
        CHECK(std::abs(det_monomial_vector(m).sum() - d) <= 1e-9 * std::max(1.0, std::abs(d)));
    }
}

TEST_CASE("matrix colopsidedness") {
    CHECK(matrix_is_colopsided(fixtures::theta1()));
    CHECK(matrix_is_colopsided(fixtures::theta2()));
    CHECK_FALSE(matrix_is_colopsided(fixtures::theta3()));
    CHECK_FALSE(matrix_is_colopsided(fixtures::four_i()));
    CHECK(matrix_is_colopsided(fixtures::four_w()));
    CHECK_FALSE(matrix_is_colopsided(PhaseMatrix::filled(2, 2)));  // 1 - 1: antipodal
}

TEST_CASE("hull plot data") {
    const auto h = hull_plot_data(fixtures::theta1());
    REQUIRE(h.points.size() == 3);
    std::size_t total = 0;
    for (const auto& p : h.points) total += p.multiplicity;
    CHECK(total == 6);
    CHECK(h.hull_cycle.size() == 3);

    const auto h3 = hull_plot_data(fixtures::theta3());
    CHECK(h3.points.size() == 4);
    for (const auto& p : h3.points) CHECK(p.is_hull_vertex);
}

TEST_CASE("2x2 examples") {
    const auto v = det_monomial_vector(PhaseMatrix::filled(2, 2));
    REQUIRE(v.terms.size() == 2);
    CHECK(v.terms[0].phase == Angle{});
    CHECK(v.terms[1].phase == Angle(kPi));
    const auto h = hull_plot_data(PhaseMatrix::filled(2, 2));
    REQUIRE(h.points.size() == 2);
    for (const auto& p : h.points) {
        CHECK(p.multiplicity == 1);
        CHECK(std::abs(std::abs(p.point.real()) - 1.0) < 1e-15);
    }
}

TEST_CASE("theta2 collapses to three points") {
    const auto h = hull_plot_data(fixtures::theta2());
    REQUIRE(h.points.size() == 3);
    for (const auto& p : h.points) CHECK(p.multiplicity == 2);
}

TEST_CASE("hull of the colopsided 4x4") {
    const auto h = hull_plot_data(fixtures::four_w());
    std::vector<Angle> vertices;
    for (std::size_t k : h.hull_cycle) vertices.push_back(arg_of(h.points[k].point));
    REQUIRE(vertices.size() == 5);
    for (int q : {2, 3, 4, 5, 6}) {
        bool found = false;
        for (Angle a : vertices) found |= circular_distance(a, Angle::from_pi_fraction(q, 4)) < 1e-9;
        CHECK_MESSAGE(found, "missing vertex at ", q, "pi/4");
    }
}
