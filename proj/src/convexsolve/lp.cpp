#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "phaserank/convexsolve.hpp"
#include "phaserank/errors.hpp"

namespace phaserank::convex {

const char* to_string(Status s) {
    switch (s) {
        case Status::optimal: return "optimal";
        case Status::infeasible: return "infeasible";
        case Status::unbounded: return "unbounded";
        case Status::numerical_failure: return "numerical_failure";
    }
    return "unknown";
}

namespace {

constexpr double kPivotTol = 1e-12;

// Dense simplex tableau for  min c.x  s.t.  A x = b (b >= 0),  x >= 0,
// with one artificial column per row appended after the structural columns.
class Tableau {
public:
    Tableau(const Eigen::MatrixXd& a, const Eigen::VectorXd& b)
        : m_(a.rows()), n_(a.cols()), t_(Eigen::MatrixXd::Zero(a.rows() + 1, a.cols() + a.rows() + 1)),
          basis_(static_cast<std::size_t>(a.rows())) {
        t_.topLeftCorner(m_, n_) = a;
        t_.block(0, n_, m_, m_).setIdentity();
        t_.col(rhs_col()).head(m_) = b;
        for (Eigen::Index i = 0; i < m_; ++i) basis_[static_cast<std::size_t>(i)] = n_ + i;
    }

    [[nodiscard]] Eigen::Index rhs_col() const { return n_ + m_; }
    [[nodiscard]] Eigen::Index rows() const { return m_; }
    [[nodiscard]] Eigen::Index structural() const { return n_; }
    [[nodiscard]] const Eigen::MatrixXd& table() const { return t_; }
    [[nodiscard]] const std::vector<Eigen::Index>& basis() const { return basis_; }

    // Loads reduced costs for the cost vector over all n+m columns.
    void set_costs(const Eigen::VectorXd& cost) {
        auto obj = t_.row(m_);
        obj.head(n_ + m_) = cost.transpose();
        obj(rhs_col()) = 0.0;
        for (Eigen::Index i = 0; i < m_; ++i) {
            const double cb = cost(basis_[static_cast<std::size_t>(i)]);
            if (cb != 0.0) obj -= cb * t_.row(i);
        }
    }

    void pivot(Eigen::Index r, Eigen::Index c) {
        t_.row(r) /= t_(r, c);
        for (Eigen::Index i = 0; i <= m_; ++i) {
            if (i == r) continue;
            const double f = t_(i, c);
            if (f != 0.0) t_.row(i) -= f * t_.row(r);
        }
        t_(r, c) = 1.0;
        basis_[static_cast<std::size_t>(r)] = c;
    }

    enum class Outcome { optimal, unbounded, iteration_cap };

    // Bland's rule: lowest-index improving column, lowest-index basic variable on ties.
    Outcome run(Eigen::Index allowed_cols, double tol, int& iterations, Eigen::Index& unbounded_col) {
        while (true) {
            Eigen::Index enter = -1;
            for (Eigen::Index j = 0; j < allowed_cols; ++j) {
                if (t_(m_, j) < -tol) {
                    enter = j;
                    break;
                }
            }
            if (enter < 0) return Outcome::optimal;
            if (iterations >= kLpIterationCap) return Outcome::iteration_cap;

            Eigen::Index leave = -1;
            double best = std::numeric_limits<double>::infinity();
            for (Eigen::Index i = 0; i < m_; ++i) {
                const double aij = t_(i, enter);
                if (aij <= kPivotTol) continue;
                const double ratio = t_(i, rhs_col()) / aij;
                if (ratio < best - 1e-15 ||
                    (std::fabs(ratio - best) <= 1e-15 && basis_[static_cast<std::size_t>(i)] <
                                                             basis_[static_cast<std::size_t>(leave)])) {
                    best = ratio;
                    leave = i;
                }
            }
            if (leave < 0) {
                unbounded_col = enter;
                return Outcome::unbounded;
            }
            pivot(leave, enter);
            ++iterations;
        }
    }

    // Duals y = c_B^T B^{-1}, read off the artificial columns (which hold B^{-1}).
    [[nodiscard]] Eigen::VectorXd duals(const Eigen::VectorXd& cost) const {
        Eigen::VectorXd y(m_);
        for (Eigen::Index k = 0; k < m_; ++k) y(k) = cost(n_ + k) - t_(m_, n_ + k);
        return y;
    }

    [[nodiscard]] Eigen::VectorXd solution() const {
        Eigen::VectorXd x = Eigen::VectorXd::Zero(n_ + m_);
        for (Eigen::Index i = 0; i < m_; ++i) x(basis_[static_cast<std::size_t>(i)]) = t_(i, rhs_col());
        return x;
    }

private:
    Eigen::Index m_;
    Eigen::Index n_;
    Eigen::MatrixXd t_;
    std::vector<Eigen::Index> basis_;
};

}  // namespace

SolveStatus solve_lp(const LinearProgram& p, double tol) {
    const Eigen::Index nvar = p.objective.size();
    const Eigen::Index ncon = p.eq_matrix.rows();
    if (p.eq_matrix.cols() != nvar || p.eq_rhs.size() != ncon || p.lower.size() != nvar)
        throw DomainError("linear program dimensions are inconsistent");
    if (static_cast<std::size_t>(nvar) > kMaxLpVariables || static_cast<std::size_t>(ncon) > kMaxLpConstraints)
        throw CapacityError("linear program exceeds " + std::to_string(kMaxLpVariables) + " variables or " +
                            std::to_string(kMaxLpConstraints) + " constraints");
    if (!p.eq_rhs.allFinite()) throw DomainError("linear program rhs must be finite");

    // Standard form columns: x_j = lower_j + x'_j, or x_j = x+_j - x-_j when free.
    std::vector<Eigen::Index> plus(static_cast<std::size_t>(nvar)), minus(static_cast<std::size_t>(nvar), -1);
    Eigen::Index ncols = 0;
    for (Eigen::Index j = 0; j < nvar; ++j) {
        plus[static_cast<std::size_t>(j)] = ncols++;
        if (!std::isfinite(p.lower(j))) minus[static_cast<std::size_t>(j)] = ncols++;
    }
    Eigen::MatrixXd a(ncon, ncols);
    Eigen::VectorXd c(ncols);
    Eigen::VectorXd b = p.eq_rhs;
    for (Eigen::Index j = 0; j < nvar; ++j) {
        const auto pj = plus[static_cast<std::size_t>(j)];
        a.col(pj) = p.eq_matrix.col(j);
        c(pj) = p.objective(j);
        if (const auto mj = minus[static_cast<std::size_t>(j)]; mj >= 0) {
            a.col(mj) = -p.eq_matrix.col(j);
            c(mj) = -p.objective(j);
        } else {
            b -= p.eq_matrix.col(j) * p.lower(j);
        }
    }
    Eigen::VectorXd row_sign = Eigen::VectorXd::Ones(ncon);
    for (Eigen::Index i = 0; i < ncon; ++i) {
        if (b(i) < 0.0) {
            row_sign(i) = -1.0;
            a.row(i) *= -1.0;
            b(i) = -b(i);
        }
    }

    auto to_user = [&](const Eigen::VectorXd& xs, bool is_ray) {
        Eigen::VectorXd x(nvar);
        for (Eigen::Index j = 0; j < nvar; ++j) {
            const auto pj = plus[static_cast<std::size_t>(j)];
            const auto mj = minus[static_cast<std::size_t>(j)];
            x(j) = mj >= 0 ? xs(pj) - xs(mj) : xs(pj) + (is_ray ? 0.0 : p.lower(j));
        }
        return x;
    };

    SolveStatus out;
    Tableau tab(a, b);
    const double feas_tol = tol * std::max(1.0, b.lpNorm<Eigen::Infinity>());

    // Phase 1: minimize the sum of artificials.
    Eigen::VectorXd cost1 = Eigen::VectorXd::Zero(ncols + ncon);
    cost1.tail(ncon).setOnes();
    tab.set_costs(cost1);
    Eigen::Index ucol = -1;
    if (tab.run(ncols, tol, out.iterations, ucol) == Tableau::Outcome::iteration_cap) {
        out.status = Status::numerical_failure;
        out.message = "phase 1 hit the iteration cap after " + std::to_string(out.iterations) + " pivots";
        return out;
    }
    const double infeas = -tab.table()(ncon, tab.rhs_col());
    if (infeas > feas_tol) {
        out.status = Status::infeasible;
        out.certificate = tab.duals(cost1).cwiseProduct(row_sign);
        out.primal_residual = infeas;
        out.message = "phase 1 optimum " + std::to_string(infeas) + " > 0";
        return out;
    }
    // Drive zero-level artificials out of the basis where a structural pivot exists.
    for (Eigen::Index i = 0; i < ncon; ++i) {
        if (tab.basis()[static_cast<std::size_t>(i)] < ncols) continue;
        for (Eigen::Index j = 0; j < ncols; ++j) {
            if (std::fabs(tab.table()(i, j)) > 1e-9) {
                tab.pivot(i, j);
                break;
            }
        }
    }

    // Phase 2.
    Eigen::VectorXd cost2 = Eigen::VectorXd::Zero(ncols + ncon);
    cost2.head(ncols) = c;
    tab.set_costs(cost2);
    const auto outcome = tab.run(ncols, tol, out.iterations, ucol);
    if (outcome == Tableau::Outcome::iteration_cap) {
        out.status = Status::numerical_failure;
        out.message = "phase 2 hit the iteration cap after " + std::to_string(out.iterations) + " pivots";
        return out;
    }
    if (outcome == Tableau::Outcome::unbounded) {
        Eigen::VectorXd ray = Eigen::VectorXd::Zero(ncols + ncon);
        ray(ucol) = 1.0;
        for (Eigen::Index i = 0; i < ncon; ++i) ray(tab.basis()[static_cast<std::size_t>(i)]) = -tab.table()(i, ucol);
        out.status = Status::unbounded;
        out.certificate = to_user(ray.head(ncols), true);
        out.objective = -std::numeric_limits<double>::infinity();
        return out;
    }

    const Eigen::VectorXd xs = tab.solution().head(ncols);
    const Eigen::VectorXd ys = tab.duals(cost2);
    out.status = Status::optimal;
    out.primal = to_user(xs, false);
    out.dual = ys.cwiseProduct(row_sign);
    out.objective = p.objective.dot(out.primal);
    out.duality_gap = std::fabs(c.dot(xs) - b.dot(ys));
    out.primal_residual = (p.eq_matrix * out.primal - p.eq_rhs).lpNorm<Eigen::Infinity>();
    return out;
}

}  // namespace phaserank::convex
