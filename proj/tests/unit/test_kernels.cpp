#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <cstring>
#include <random>
#include <vector>

#include "phaserank/angle.hpp"
#include "phaserank/colop.hpp"
#include "phaserank/kernels/kernels.hpp"

using namespace phaserank;
namespace k = phaserank::kernels;

namespace {
std::vector<double> uniform(std::size_t n, std::mt19937_64& rng, double lo, double hi) {
    std::uniform_real_distribution<double> u(lo, hi);
    std::vector<double> v(n);
    for (auto& x : v) x = u(rng);
    return v;
}
}  // namespace

TEST_CASE("scalar gap margin matches the reference oracle") {
    std::mt19937_64 rng(4);
    const auto a = uniform(5, rng, -7, 7), b = uniform(5, rng, -7, 7), s = uniform(200, rng, 0, kTwoPi);
    const double t = 2.5;
    std::vector<double> out(s.size());
    k::scalar::gap_margin_row(a.data(), b.data(), a.size(), s.data(), t, s.size(), out.data());
    for (std::size_t i = 0; i < s.size(); ++i) {
        double best = -kPi;
        for (std::size_t j = 0; j < a.size(); ++j) {
            const std::vector<Angle> p = {Angle{}, Angle(s[i] + a[j]), Angle(t + b[j])};
            best = std::max(best, gap_margin(p));
        }
        CHECK(out[i] == doctest::Approx(best).epsilon(1e-12));
    }
}

TEST_CASE("avx2 gap margin is bit-identical") {
    const auto* v = k::avx2_kernels();
    if (v == nullptr) {
        MESSAGE("AVX2 not available on this machine; skipping");
        return;
    }
    std::mt19937_64 rng(99);
    for (std::size_t columns : {1u, 3u, 4u, 9u}) {
        for (std::size_t count : {1u, 3u, 4u, 7u, 64u, 513u}) {
            const auto a = uniform(columns, rng, -10, 10), b = uniform(columns, rng, -10, 10);
            const auto s = uniform(count, rng, 0, kTwoPi);
            const double t = uniform(1, rng, 0, kTwoPi)[0];
            std::vector<double> x(count), y(count);
            k::scalar::gap_margin_row(a.data(), b.data(), columns, s.data(), t, count, x.data());
            v->gap_margin_row(a.data(), b.data(), columns, s.data(), t, count, y.data());
            CHECK(std::memcmp(x.data(), y.data(), count * sizeof(double)) == 0);
        }
    }
    // Exact ties: angles landing on identical values.
    const double a[] = {0.0, kPi}, b[] = {kPi, 0.0}, s[] = {0.0, kPi, kPi / 2, 0.0, kTwoPi};
    double x[5], y[5];
    k::scalar::gap_margin_row(a, b, 2, s, 0.0, 5, x);
    v->gap_margin_row(a, b, 2, s, 0.0, 5, y);
    CHECK(std::memcmp(x, y, sizeof x) == 0);
}

TEST_CASE("avx2 jacobi column ops agree within tolerance") {
    const auto* v = k::avx2_kernels();
    if (v == nullptr) {
        MESSAGE("AVX2 not available on this machine; skipping");
        return;
    }
    std::mt19937_64 rng(7);
    for (std::size_t n : {1u, 2u, 5u, 8u, 33u, 128u}) {
        auto xr = uniform(n, rng, -1, 1), xi = uniform(n, rng, -1, 1);
        auto yr = uniform(n, rng, -1, 1), yi = uniform(n, rng, -1, 1);
        const auto g1 = k::scalar::column_gram(xr.data(), xi.data(), yr.data(), yi.data(), n);
        const auto g2 = v->column_gram(xr.data(), xi.data(), yr.data(), yi.data(), n);
        const double scale = 1e-13 * static_cast<double>(n);
        CHECK(g1.alpha == doctest::Approx(g2.alpha).epsilon(scale));
        CHECK(g1.beta == doctest::Approx(g2.beta).epsilon(scale));
        CHECK(std::fabs(g1.gamma_re - g2.gamma_re) <= scale);
        CHECK(std::fabs(g1.gamma_im - g2.gamma_im) <= scale);

        auto xr2 = xr, xi2 = xi, yr2 = yr, yi2 = yi;
        const double c = std::cos(0.3), sn = std::sin(0.3), gr = std::cos(1.1), gi = std::sin(1.1);
        k::scalar::rotate_columns(xr.data(), xi.data(), yr.data(), yi.data(), n, c, sn, gr, gi);
        v->rotate_columns(xr2.data(), xi2.data(), yr2.data(), yi2.data(), n, c, sn, gr, gi);
        for (std::size_t i = 0; i < n; ++i) {
            CHECK(std::fabs(xr[i] - xr2[i]) <= 1e-15);
            CHECK(std::fabs(xi[i] - xi2[i]) <= 1e-15);
            CHECK(std::fabs(yr[i] - yr2[i]) <= 1e-15);
            CHECK(std::fabs(yi[i] - yi2[i]) <= 1e-15);
        }
    }
}

TEST_CASE("dispatch") {
    CHECK(std::strcmp(k::scalar_kernels().name, "scalar") == 0);
    CHECK(k::active_kernels().gap_margin_row != nullptr);
}
