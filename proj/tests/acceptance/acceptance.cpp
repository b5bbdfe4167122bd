// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fail.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "phaserank/bounds.hpp"
#include "phaserank/colop.hpp"
#include "phaserank/detvec.hpp"
#include "phaserank/rank3.hpp"
#include "phaserank/scaling.hpp"
#include "phaserank/tolerances.hpp"

using namespace phaserank;
using Clock = std::chrono::steady_clock;

namespace {

struct Check {
    bool ok = true;
    std::ostringstream why;

    void expect(bool cond, const std::string& what) {
        if (!cond) {
            if (!ok) why << "; ";
            why << what;
            ok = false;
        }
    }
};

template <class F>
auto timed(double& seconds, F&& f) {
    const auto t0 = Clock::now();
    auto r = f();
    seconds = std::chrono::duration<double>(Clock::now() - t0).count();
    return r;
}

std::string num(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6g", x);
    return buf;
}

struct Named {
    const char* name;
    PhaseMatrix m;
};

std::vector<Named> bound_matrices() {
    return {{"6x6 sign", fixtures::sign6()}, {"4x4", fixtures::four_i()}, {"8x8", fixtures::eight()}};
}

// 1
void spectral(Check& c) {
    const double expected[] = {1.7990, 1.5751, 1.8383};
    int k = 0;
    for (const auto& [name, m] : bound_matrices()) {
        double t = 0;
        const double v = timed(t, [&] { return forster_bound(m); });
        c.expect(std::fabs(v - expected[k]) <= 1e-3, std::string(name) + " forster " + num(v));
        c.expect(t < 0.1, std::string(name) + " took " + num(t) + " s");
        ++k;
    }
}

// 2
void sdp(Check& c) {
    const double expected[] = {2.0261, 1.6996, 2.0335};
    int k = 0;
    for (const auto& [name, m] : bound_matrices()) {
        double t = 0;
        const double v = timed(t, [&] { return gamma2_star_bound(m); });
        c.expect(std::fabs(v - expected[k]) <= 1e-2, std::string(name) + " gamma2 " + num(v));
        c.expect(t < 30.0, std::string(name) + " took " + num(t) + " s");
        ++k;
    }
    AnalyzeOptions o;
    o.forster_star = false;
    const auto r = analyze(fixtures::eight(), o);
    c.expect(r.ceil_lb == 3, "8x8 ceil_lb " + std::to_string(r.ceil_lb));
}

// 3
void colopsided_suite(Check& c) {
    struct Case {
        const char* name;
        PhaseMatrix m;
        bool colop;
        bool boundary;
    };
    const Case cases[] = {{"theta1", fixtures::theta1(), true, false},
                          {"theta2", fixtures::theta2(), true, true},
                          {"theta3", fixtures::theta3(), false, false},
                          {"4x4 (1,1,1,i)", fixtures::four_i(), false, false},
                          {"4x4 w", fixtures::four_w(), true, false}};
    for (const auto& cs : cases) {
        double t = 0;
        const bool v = timed(t, [&] { return matrix_is_colopsided(cs.m); });
        c.expect(v == cs.colop, std::string(cs.name) + " decided " + (v ? "colopsided" : "not colopsided"));
        c.expect(t < 0.01, std::string(cs.name) + " took " + num(t) + " s");
        if (cs.boundary) {
            const auto r = relint_contains_origin(det_monomial_vector(cs.m).phases());
            c.expect(r.boundary, std::string(cs.name) + " not boundary-flagged");
            c.expect(decide_rank3(cs.m).boundary, std::string(cs.name) + " rank3 decision not boundary-flagged");
        }
    }
}

bool witness_ok(const PhaseMatrix& theta, double sigma_ratio_max, std::string& why) {
    const auto w = witness_rank3(theta);
    if (!w) {
        why = "no witness";
        return false;
    }
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) {
            const auto z = w->m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
            if (std::abs(z) == 0.0 || circular_distance(arg_of(z), theta(i, j)) > 1e-9) {
                why = "phase mismatch";
                return false;
            }
        }
    if (w->det_residual > 1e-8) {
        why = "det residual " + num(w->det_residual);
        return false;
    }
    if (sigma_ratio_max > 0) {
        Eigen::JacobiSVD<ComplexMatrix> svd(w->m);
        const double ratio = svd.singularValues()(2) / svd.singularValues()(0);
        if (ratio > sigma_ratio_max) {
            why = "sigma3/sigma1 " + num(ratio);
            return false;
        }
    }
    return true;
}

// 4
void witnesses(Check& c) {
    std::string why;
    c.expect(witness_ok(fixtures::theta3(), 1e-7, why), "theta3: " + why);
    c.expect(witness_ok(fixtures::intro3(), 1e-7, why), "3x3 intro example: " + why);
    std::mt19937_64 rng(20240611);
    int built = 0, failed = 0, drawn = 0;
    while (built + failed < 1000) {
        ++drawn;
        const auto m = fixtures::random_matrix(3, 3, rng);
        const auto d = decide_rank3(m);
        if (d.rank != 2 || d.lp_margin <= 1e-6) continue;
        try {
            if (witness_ok(m, 0, why)) ++built;
            else ++failed;
        } catch (const std::exception& e) {
            why = e.what();
            ++failed;
        }
    }
    c.expect(failed == 0, std::to_string(failed) + " of 1000 random witnesses failed (last: " + why + ")");
}

// 5
void oracle_equivalence(Check& c) {
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<int> size(2, 8);
    int disagreements = 0, skipped = 0;
    for (int k = 0; k < 10000; ++k) {
        const auto p = fixtures::random_angles(static_cast<std::size_t>(size(rng)), rng);
        const auto lp = relint_contains_origin(p);
        if (lp.boundary || std::fabs(gap_margin(p)) <= tol::kBoundaryBand) {
            ++skipped;
            continue;
        }
        if (is_colopsided_gap(p) == lp.in_relint) ++disagreements;
    }
    c.expect(disagreements == 0, std::to_string(disagreements) + " disagreements");
    c.expect(skipped < 100, std::to_string(skipped) + " sets fell in the boundary band");
}

// 6
void coverage(Check& c) {
    struct Case {
        const char* name;
        PhaseMatrix m;
        CoverageVerdict want;
    };
    const Case cases[] = {{"first 3x3", fixtures::scaled3(), CoverageVerdict::rank_deficient_certified},
                          {"second 3x3", fixtures::covered3(), CoverageVerdict::full_rank_certified},
                          {"3x4 signs", fixtures::signs3x4(), CoverageVerdict::full_rank_certified}};
    for (const auto& cs : cases) {
        double t = 0;
        const auto cert = timed(t, [&] { return coverage_check_3xm(cs.m, 512); });
        c.expect(cert.verdict == cs.want, std::string(cs.name) + " verdict " + to_string(cert.verdict));
        c.expect(t < 5.0, std::string(cs.name) + " took " + num(t) + " s");
        if (cs.want == CoverageVerdict::rank_deficient_certified) {
            const bool ok = cert.grid.witness &&
                            scaling_is_noncolopsided(cs.m, ScalingVector{{Angle{}, cert.grid.witness->first,
                                                                          cert.grid.witness->second}});
            c.expect(ok, std::string(cs.name) + " witness scaling not re-verified");
        }
    }
    // Every 3x3 submatrix of the 3x4 sign matrix is rank deficient.
    const auto s = fixtures::signs3x4();
    for (std::size_t drop = 0; drop < 4; ++drop) {
        std::vector<Angle> e;
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 4; ++j)
                if (j != drop) e.push_back(s(i, j));
        c.expect(decide_rank3(PhaseMatrix(3, 3, e)).rank < 3, "3x4 signs: a 3x3 submatrix has rank 3");
    }
}

// 7
void structural(Check& c) {
    const auto a = structural_upper_bound(100, 100), b = structural_upper_bound(1000, 1000);
    c.expect(a.bound == 91, "(100,100) bound " + std::to_string(a.bound));
    c.expect(b.bound == 929, "(1000,1000) bound " + std::to_string(b.bound));
    int outside = 0;
    for (int e = 0; e <= 300; ++e) {
        const auto m = static_cast<std::size_t>(std::llround(4.0 * std::pow(250000.0, e / 300.0)));
        const auto r = structural_upper_bound(4, m);
        if (r.k_star < r.lambert_lower || r.k_star > r.lambert_upper) ++outside;
    }
    c.expect(outside == 0, std::to_string(outside) + " sampled m with k_star outside the Lambert bracket");
}

// 8
void volume(Check& c) {
    double total = 0;
    for (std::size_t n = 2; n <= 7; ++n) {
        const std::size_t samples = 1000000;
        double t = 0;
        const double f = timed(t, [&] { return colop_volume_fraction(n, samples, 100 + n); });
        total += t;
        const double p = static_cast<double>(n) / std::ldexp(1.0, static_cast<int>(n) - 1);
        const double sigma = std::sqrt(p * (1 - p) / static_cast<double>(samples));
        c.expect(std::fabs(f - p) <= 4 * sigma, "n=" + std::to_string(n) + " fraction " + num(f) + " vs " + num(p));
    }
    c.expect(total < 10.0, "took " + num(total) + " s");
}

// 9
void identities(Check& c) {
    const Eigen::MatrixXd bt = b_matrix().transpose();
    Eigen::FullPivLU<Eigen::MatrixXd> lu(bt);
    const Eigen::MatrixXd kernel = lu.kernel();
    c.expect(kernel.cols() == 1, "dim Null(B^T) = " + std::to_string(kernel.cols()));
    if (kernel.cols() == 1) {
        Eigen::VectorXd u(6);
        u << 1, 1, 1, -1, -1, -1;
        const Eigen::VectorXd k = kernel.col(0) / kernel(0, 0);
        c.expect((k - u).norm() <= 1e-12, "kernel not spanned by (1,1,1,-1,-1,-1)");
    }
    std::mt19937_64 rng(9);
    int bad = 0;
    for (int k = 0; k < 500; ++k) {
        const auto n = static_cast<std::size_t>(1 + k % 5);
        const auto m = fixtures::random_matrix(n, n, rng);
        const auto d = m.to_complex().determinant();
        const auto s = det_monomial_vector(m).sum();
        if (std::abs(s - d) > 1e-9 * std::max(std::abs(d), 1e-300) && std::abs(s - d) > 1e-13) ++bad;
    }
    c.expect(bad == 0, std::to_string(bad) + " determinant mismatches");
}

// 10
void invariance(Check& c) {
    std::mt19937_64 rng(10);
    auto random_perm = [&](std::size_t n) {
        std::vector<std::size_t> p(n);
        std::iota(p.begin(), p.end(), 0);
        std::shuffle(p.begin(), p.end(), rng);
        return p;
    };
    auto transform = [&](const PhaseMatrix& m) {
        const auto rp = random_perm(m.rows()), cp = random_perm(m.cols());
        return m.permuted(rp, cp).scaled(fixtures::random_angles(m.rows(), rng), fixtures::random_angles(m.cols(), rng));
    };

    for (const auto& m : {fixtures::intro3(), fixtures::theta1(), fixtures::theta2(), fixtures::theta3(),
                          fixtures::scaled3(), fixtures::covered3()}) {
        const auto base = decide_rank3(m);
        const bool colop = matrix_is_colopsided(m);
        for (int k = 0; k < 100; ++k) {
            const auto t = transform(m);
            if (decide_rank3(t).rank != base.rank) {
                c.expect(false, "decide_rank3 changed under a symmetry");
                return;
            }
            if (matrix_is_colopsided(t) != colop) {
                c.expect(false, "matrix_is_colopsided changed under a symmetry");
                return;
            }
        }
    }
    for (const auto& m : {fixtures::four_i(), fixtures::four_w()}) {
        const bool colop = matrix_is_colopsided(m);
        for (int k = 0; k < 100; ++k)
            if (matrix_is_colopsided(transform(m)) != colop) {
                c.expect(false, "4x4 colopsidedness changed under a symmetry");
                return;
            }
    }

    double worst = 0.0;
    std::string where;
    for (const auto& [name, m] : bound_matrices()) {
        const double f0 = forster_bound(m), s0 = forster_star_bound(m), g0 = gamma2_star_bound(m);
        for (int k = 0; k < 100; ++k) {
            const auto t = transform(m);
            const double d[] = {std::fabs(forster_bound(t) - f0), std::fabs(forster_star_bound(t) - s0),
                                std::fabs(gamma2_star_bound(t) - g0)};
            for (int b = 0; b < 3; ++b)
                if (d[b] > worst) {
                    worst = d[b];
                    where = std::string(name) + (b == 0 ? " forster" : b == 1 ? " forster-star" : " gamma2");
                }
        }
    }
    c.expect(worst <= 1e-8, "bound drift " + num(worst) + " (" + where + ")");
}

}  // namespace

int main() {
    const std::pair<const char*, std::function<void(Check&)>> criteria[] = {
        {"forster bound on the three reference matrices", spectral},
        {"gamma2 bound on the three reference matrices, 8x8 ceil_lb = 3", sdp},
        {"colopsidedness decisions", colopsided_suite},
        {"3x3 witness construction", witnesses},
        {"gap and LP oracles agree on random point sets", oracle_equivalence},
        {"torus coverage certificates at 512^2", coverage},
        {"structural upper bound and Lambert bracket", structural},
        {"colopsided volume fraction", volume},
        {"incidence kernel and determinant expansion", identities},
        {"invariance under permutations and phase scalings", invariance},
    };
    int failed = 0, index = 0;
    for (const auto& [title, fn] : criteria) {
        ++index;
        Check c;
        double t = 0;
        try {
            const auto t0 = Clock::now();
            fn(c);
            t = std::chrono::duration<double>(Clock::now() - t0).count();
        } catch (const std::exception& e) {
            c.expect(false, std::string("exception: ") + e.what());
        }
        std::printf("%s %2d  %s (%.2fs)%s%s\n", c.ok ? "PASS" : "FAIL", index, title, t, c.ok ? "" : ": ",
                    c.ok ? "" : c.why.str().c_str());
        if (!c.ok) ++failed;
    }
    std::printf("%d/%d criteria passed\n", index - failed, index);
    return failed == 0 ? 0 : 1;
}
