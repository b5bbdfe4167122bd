#include "phaserank/detvec.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "phaserank/colop.hpp"
#include "phaserank/errors.hpp"
#include "phaserank/tolerances.hpp"

namespace phaserank {

namespace {

int parity(const std::vector<std::uint8_t>& p) {
    int inversions = 0;
    for (std::size_t a = 0; a < p.size(); ++a)
        for (std::size_t b = a + 1; b < p.size(); ++b)
            if (p[a] > p[b]) ++inversions;
    return inversions % 2 == 0 ? 1 : -1;
}

std::vector<std::vector<std::uint8_t>> permutation_order(std::size_t n) {
    if (n == 3) return {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}, {0, 2, 1}, {1, 0, 2}, {2, 1, 0}};
    std::vector<std::vector<std::uint8_t>> out;
    std::vector<std::uint8_t> p(n);
    std::iota(p.begin(), p.end(), std::uint8_t{0});
    do {
        out.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

void check_square(const PhaseMatrix& theta) {
    if (!theta.is_square()) {
        throw DomainError("determinant monomials need a square matrix, got " + std::to_string(theta.rows()) + "x" +
                          std::to_string(theta.cols()));
    }
    if (theta.rows() > kMaxDetVectorSize) {
        throw CapacityError("determinant monomial vector limited to n <= " + std::to_string(kMaxDetVectorSize) +
                            ", got n = " + std::to_string(theta.rows()));
    }
}

double cross(std::complex<double> o, std::complex<double> a, std::complex<double> b) {
    return (a.real() - o.real()) * (b.imag() - o.imag()) - (a.imag() - o.imag()) * (b.real() - o.real());
}

}  // namespace

std::vector<Angle> DetMonomialVector::phases() const {
    std::vector<Angle> out;
    out.reserve(terms.size());
    for (const auto& t : terms) out.push_back(t.phase);
    return out;
}

std::complex<double> DetMonomialVector::sum() const {
    std::complex<double> s{};
    for (const auto& t : terms) s += t.phase.unit();
    return s;
}

std::size_t DetMonomialVector::index_of(const std::vector<std::uint8_t>& permutation) const {
    for (std::size_t k = 0; k < terms.size(); ++k)
        if (terms[k].permutation == permutation) return k;
    throw DomainError("permutation not present in determinant vector");
}

DetMonomialVector det_monomial_vector(const PhaseMatrix& theta) {
    check_square(theta);
    DetMonomialVector v;
    v.n = theta.rows();
    for (auto& p : permutation_order(v.n)) {
        DetTerm t;
        t.sign = parity(p);
        double phase = t.sign < 0 ? kPi : 0.0;
        for (std::size_t i = 0; i < v.n; ++i) phase += theta(i, p[i]).radians();
        t.phase = Angle(phase);
        t.permutation = std::move(p);
        v.terms.push_back(std::move(t));
    }
    return v;
}

bool matrix_is_colopsided(const PhaseMatrix& theta) { return is_colopsided_gap(det_monomial_vector(theta).phases()); }

HullPlotData hull_plot_data(const PhaseMatrix& theta) {
    auto phases = det_monomial_vector(theta).phases();
    std::sort(phases.begin(), phases.end(), [](Angle a, Angle b) { return a.radians() < b.radians(); });

    HullPlotData out;
    std::vector<Angle> reps;
    for (Angle a : phases) {
        if (!reps.empty() && std::abs(a.unit() - reps.back().unit()) <= tol::kDedup) {
            ++out.points.back().multiplicity;
            continue;
        }
        reps.push_back(a);
        out.points.push_back({a.unit(), 1, false});
    }
    // Wrap-around: the last run may coincide with the first.
    if (out.points.size() > 1 && std::abs(out.points.back().point - out.points.front().point) <= tol::kDedup) {
        out.points.front().multiplicity += out.points.back().multiplicity;
        out.points.pop_back();
    }

    // Andrew's monotone chain; strict turns only, so collinear points are not vertices.
    const std::size_t n = out.points.size();
    std::vector<std::size_t> idx(n);
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
        const auto pa = out.points[a].point, pb = out.points[b].point;
        return pa.real() < pb.real() || (pa.real() == pb.real() && pa.imag() < pb.imag());
    });
    if (n <= 2) {
        out.hull_cycle = idx;
    } else {
        std::vector<std::size_t> hull(2 * n);
        std::size_t k = 0;
        for (std::size_t i = 0; i < n; ++i) {
            while (k >= 2 && cross(out.points[hull[k - 2]].point, out.points[hull[k - 1]].point,
                                   out.points[idx[i]].point) <= 1e-15)
                --k;
            hull[k++] = idx[i];
        }
        for (std::size_t i = n - 1, lower = k + 1; i-- > 0;) {
            while (k >= lower && cross(out.points[hull[k - 2]].point, out.points[hull[k - 1]].point,
                                       out.points[idx[i]].point) <= 1e-15)
                --k;
            hull[k++] = idx[i];
        }
        hull.resize(k - 1);
        out.hull_cycle = hull;
    }
    for (auto i : out.hull_cycle) out.points[i].is_hull_vertex = true;
    return out;
}

}  // namespace phaserank
