#include "phaserank/rank3.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <string>

#include "phaserank/colop.hpp"
#include "phaserank/errors.hpp"
#include "phaserank/tolerances.hpp"

namespace phaserank {

namespace {

void require_3x3(const PhaseMatrix& theta) {
    if (theta.rows() != 3 || theta.cols() != 3) {
        throw DomainError("expected a 3x3 phase matrix, got " + std::to_string(theta.rows()) + "x" +
                          std::to_string(theta.cols()));
    }
}

double red_product(const std::array<double, 6>& x) { return x[0] * x[1] * x[2]; }
double blue_product(const std::array<double, 6>& x) { return x[3] * x[4] * x[5]; }

// Positive weights on the subset `keep` of the six points, zero elsewhere.
std::optional<std::array<double, 6>> subset_weights(const std::vector<Angle>& pts, unsigned keep, double& margin) {
    std::vector<Angle> sub;
    std::vector<int> where;
    for (int k = 0; k < 6; ++k)
        if (keep & (1u << k)) {
            sub.push_back(pts[static_cast<std::size_t>(k)]);
            where.push_back(k);
        }
    const auto r = relint_contains_origin(sub);
    margin = r.margin;
    if (r.weights.empty()) return std::nullopt;
    std::array<double, 6> b{};
    for (std::size_t i = 0; i < where.size(); ++i) b[static_cast<std::size_t>(where[i])] = r.weights[i];
    return b;
}

// Root of prod_red(a + l b) - prod_blue(a + l b) for l > 0, given g(0) > 0 and
// some red entry of b equal to zero.
double balance_root(const std::array<double, 6>& a, const std::array<double, 6>& b) {
    auto g = [&](double l) {
        std::array<double, 6> x;
        for (int k = 0; k < 6; ++k) x[static_cast<std::size_t>(k)] = a[static_cast<std::size_t>(k)] + l * b[static_cast<std::size_t>(k)];
        return red_product(x) - blue_product(x);
    };
    double lo = 0.0, hi = 1.0;
    for (int k = 0; g(hi) >= 0.0; ++k) {
        if (k > 200) throw InvariantError("balancing cubic has no sign change");
        lo = hi;
        hi *= 2.0;
    }
    for (int it = 0; it < 400; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        (g(mid) > 0.0 ? lo : hi) = mid;
    }
    return std::fabs(g(lo)) <= std::fabs(g(hi)) ? lo : hi;
}

}  // namespace

const char* to_string(Rank3Certificate c) {
    switch (c) {
        case Rank3Certificate::rank1: return "rank1";
        case Rank3Certificate::relint: return "relint";
        case Rank3Certificate::colopsided: return "colopsided";
    }
    return "?";
}

Rank3Decision decide_rank3(const PhaseMatrix& theta) {
    require_3x3(theta);
    Rank3Decision d;
    if (phase_rank_is_one(theta)) {
        d.rank = 1;
        d.certificate = Rank3Certificate::rank1;
        return d;
    }
    const auto r = relint_contains_origin(det_monomial_vector(theta).phases());
    d.lp_margin = r.margin;
    d.boundary = r.boundary;
    if (r.in_relint) {
        d.rank = 2;
        d.certificate = Rank3Certificate::relint;
    } else {
        d.rank = 3;
        d.certificate = Rank3Certificate::colopsided;
    }
    return d;
}

DetMonomialVector swap_first_rows(const DetMonomialVector& v) {
    if (v.n != 3 || v.terms.size() != 6) throw DomainError("expected the monomial vector of a 3x3 matrix");
    DetMonomialVector out = v;
    for (auto& t : out.terms) {
        const auto& p = t.permutation;
        const auto& src = v.terms[v.index_of({p[1], p[0], p[2]})];
        t.phase = src.phase + Angle(kPi);
    }
    return out;
}

CoefficientVector find_balanced_coefficients(const DetMonomialVector& v_in) {
    if (v_in.n != 3 || v_in.terms.size() != 6) throw DomainError("expected the monomial vector of a 3x3 matrix");
    CoefficientVector out;
    DetMonomialVector v = v_in;

    auto r = relint_contains_origin(v.phases());
    if (!r.in_relint) {
        throw DomainError("origin is not in the relative interior of the monomial points (LP margin " +
                          std::to_string(r.margin) + ")");
    }
    std::array<double, 6> a{};
    std::copy(r.weights.begin(), r.weights.end(), a.begin());

    const double scale = std::max(red_product(a), blue_product(a));
    if (std::fabs(red_product(a) - blue_product(a)) <= 1e-15 * scale) {
        out.c = a;
        return out;
    }
    if (red_product(a) < blue_product(a)) {
        // Row swap: the monomial of sigma moves to sigma composed with (0 1), negated.
        v = swap_first_rows(v);
        std::array<double, 6> swapped{};
        for (std::size_t k = 0; k < 6; ++k) {
            const auto& p = v.terms[k].permutation;
            swapped[k] = a[v.index_of({p[1], p[0], p[2]})];
        }
        a = swapped;
        out.rows_swapped = true;
    }

    // b: zero on some red points, positive on all blue ones, annihilating v.
    const auto pts = v.phases();
    std::optional<std::array<double, 6>> b;
    std::optional<std::array<double, 6>> fallback;
    double best_margin = 0.0;
    for (int size = 2; size >= 0 && !b; --size) {
        for (unsigned red = 0; red < 8 && !b; ++red) {
            if (std::popcount(red) != size) continue;
            double margin = 0.0;
            auto w = subset_weights(pts, red | 0b111000u, margin);
            if (!w) continue;
            if (margin > tol::kLp) {
                b = w;
            } else if (margin > best_margin) {
                best_margin = margin;
                fallback = w;
            }
        }
    }
    if (!b) b = fallback;
    if (!b) throw InvariantError("no red subset together with the blue points has the origin in its relative interior");

    const double lambda = balance_root(a, *b);
    double total = 0.0;
    for (std::size_t k = 0; k < 6; ++k) {
        out.c[k] = a[k] + lambda * (*b)[k];
        total += out.c[k];
    }
    for (double& x : out.c) x /= total;
    return out;
}

Eigen::Matrix<double, 6, 9> b_matrix() {
    static const int perms[6][3] = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}, {0, 2, 1}, {1, 0, 2}, {2, 1, 0}};
    Eigen::Matrix<double, 6, 9> b = Eigen::Matrix<double, 6, 9>::Zero();
    for (int k = 0; k < 6; ++k)
        for (int i = 0; i < 3; ++i) b(k, 3 * i + perms[k][i]) = 1.0;
    return b;
}

WitnessMatrix coefficients_to_witness(const PhaseMatrix& theta, const CoefficientVector& cv) {
    require_3x3(theta);
    Eigen::Matrix<double, 6, 1> logc;
    for (int k = 0; k < 6; ++k) {
        if (!(cv.c[static_cast<std::size_t>(k)] > 0.0)) throw DomainError("coefficients must be positive");
        logc(k) = std::log(cv.c[static_cast<std::size_t>(k)]);
    }

    // B B^T = [[3I, J], [J, 3I]]: eigenvalue 6 on u1 = ones, 0 on u0 = (1,1,1,-1,-1,-1),
    // 3 on the rest.
    const Eigen::Matrix<double, 6, 1> u1 = Eigen::Matrix<double, 6, 1>::Constant(1.0 / std::sqrt(6.0));
    Eigen::Matrix<double, 6, 1> u0 = u1;
    u0.tail<3>() *= -1.0;
    const Eigen::Matrix<double, 6, 6> pinv = (Eigen::Matrix<double, 6, 6>::Identity() - u1 * u1.transpose() -
                                              u0 * u0.transpose()) / 3.0 +
                                             u1 * u1.transpose() / 6.0;
    const auto b = b_matrix();
    const Eigen::Matrix<double, 9, 1> mprime = b.transpose() * (pinv * logc);
    const double residual = (b * mprime - logc).norm();
    if (residual > 1e-10 * std::max(1.0, logc.norm())) {
        throw DomainError("coefficient products are unbalanced: log-system residual " + std::to_string(residual));
    }

    WitnessMatrix w;
    w.m.resize(3, 3);
    const double top = mprime.maxCoeff();
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            w.m(i, j) = std::exp(mprime(3 * i + j) - top) * theta.unit(static_cast<std::size_t>(i), static_cast<std::size_t>(j));

    const auto v = det_monomial_vector(theta);
    std::complex<double> det{};
    double scale = 0.0;
    for (const auto& t : v.terms) {
        std::complex<double> mono = static_cast<double>(t.sign);
        for (int i = 0; i < 3; ++i) mono *= w.m(i, t.permutation[static_cast<std::size_t>(i)]);
        det += mono;
        scale = std::max(scale, std::abs(mono));
    }
    w.det_residual = std::abs(det) / scale;
    if (w.det_residual > 1e-8) {
        throw DomainError("coefficients do not annihilate the monomial vector: det residual " +
                          std::to_string(w.det_residual));
    }
    return w;
}

std::optional<WitnessMatrix> witness_rank3(const PhaseMatrix& theta) {
    const auto d = decide_rank3(theta);
    if (d.rank == 3) return std::nullopt;
    if (d.rank == 1) {
        // Theta itself has rank one.
        CoefficientVector ones;
        ones.c.fill(1.0);
        return coefficients_to_witness(theta, ones);
    }
    const auto c = find_balanced_coefficients(det_monomial_vector(theta));
    if (!c.rows_swapped) return coefficients_to_witness(theta, c);
    auto w = coefficients_to_witness(theta.with_rows_swapped(0, 1), c);
    w.m.row(0).swap(w.m.row(1));
    w.row_permutation_applied = {1, 0, 2};
    return w;
}

}  // namespace phaserank
