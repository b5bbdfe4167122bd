#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>
#include <string>
#include <vector>

#include <Eigen/Cholesky>
#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include "phaserank/convexsolve.hpp"
#include "phaserank/errors.hpp"

namespace phaserank::convex {

namespace {

using Eigen::Index;
using Eigen::MatrixXd;
using Eigen::VectorXd;

struct Triplet {
    int row;
    int col;
    double value;
};

// A constraint (or objective) split per block.
struct SparseBlocks {
    std::vector<std::pair<int, double>> lp;
    std::vector<std::vector<Triplet>> psd;
};

// Point in the product cone: LP vector followed by symmetric blocks.
struct Blocks {
    VectorXd lp;
    std::vector<MatrixXd> psd;

    double dot(const Blocks& o) const {
        double s = lp.dot(o.lp);
        for (std::size_t b = 0; b < psd.size(); ++b) s += psd[b].cwiseProduct(o.psd[b]).sum();
        return s;
    }
    double norm() const { return std::sqrt(dot(*this)); }
    Blocks& axpy(double a, const Blocks& o) {
        lp += a * o.lp;
        for (std::size_t b = 0; b < psd.size(); ++b) psd[b] += a * o.psd[b];
        return *this;
    }
};

Blocks zeros_like(std::size_t lp, const std::vector<std::size_t>& sizes) {
    Blocks z;
    z.lp = VectorXd::Zero(static_cast<Index>(lp));
    for (auto n : sizes) z.psd.push_back(MatrixXd::Zero(static_cast<Index>(n), static_cast<Index>(n)));
    return z;
}

SparseBlocks split(const BlockMatrix& m, std::size_t lp_size, const std::vector<std::size_t>& sizes) {
    SparseBlocks s;
    s.psd.resize(sizes.size());
    for (const auto& e : m) {
        if (e.block == kLpBlock) {
            if (e.row < 0 || static_cast<std::size_t>(e.row) >= lp_size) throw DomainError("LP entry out of range");
            s.lp.emplace_back(e.row, e.value);
            continue;
        }
        if (e.block < 0 || static_cast<std::size_t>(e.block) >= sizes.size()) throw DomainError("bad block index");
        const auto n = static_cast<int>(sizes[static_cast<std::size_t>(e.block)]);
        if (e.row < 0 || e.col < 0 || e.row >= n || e.col >= n) throw DomainError("PSD entry out of range");
        s.psd[static_cast<std::size_t>(e.block)].push_back({std::min(e.row, e.col), std::max(e.row, e.col), e.value});
    }
    return s;
}

Blocks densify(const SparseBlocks& s, std::size_t lp, const std::vector<std::size_t>& sizes) {
    Blocks d = zeros_like(lp, sizes);
    for (auto [r, v] : s.lp) d.lp(r) += v;
    for (std::size_t b = 0; b < sizes.size(); ++b) {
        for (const auto& t : s.psd[b]) {
            d.psd[b](t.row, t.col) += t.value;
            if (t.row != t.col) d.psd[b](t.col, t.row) += t.value;
        }
    }
    return d;
}

// <A, X> for sparse A.
double apply(const SparseBlocks& a, const Blocks& x) {
    double s = 0.0;
    for (auto [r, v] : a.lp) s += v * x.lp(r);
    for (std::size_t b = 0; b < a.psd.size(); ++b) {
        for (const auto& t : a.psd[b]) s += (t.row == t.col ? 1.0 : 2.0) * t.value * x.psd[b](t.row, t.col);
    }
    return s;
}

void add_scaled(Blocks& out, const SparseBlocks& a, double y) {
    for (auto [r, v] : a.lp) out.lp(r) += y * v;
    for (std::size_t b = 0; b < a.psd.size(); ++b) {
        for (const auto& t : a.psd[b]) {
            out.psd[b](t.row, t.col) += y * t.value;
            if (t.row != t.col) out.psd[b](t.col, t.row) += y * t.value;
        }
    }
}

void symmetrize(MatrixXd& m) { m = 0.5 * (m + m.transpose()).eval(); }

// Nesterov-Todd scaling of one PSD block: G with G^{-1} X G^{-T} = G^T S G = diag(lambda).
struct NtBlock {
    MatrixXd g;
    MatrixXd g_inv_t;  // G^{-T}
    MatrixXd w;        // G G^T
    VectorXd lambda;
};

bool nt_scaling(const MatrixXd& x, const MatrixXd& s, NtBlock& out) {
    Eigen::LLT<MatrixXd> lx(x), ls(s);
    if (lx.info() != Eigen::Success || ls.info() != Eigen::Success) return false;
    const MatrixXd l = lx.matrixL();
    const MatrixXd r = ls.matrixL();
    Eigen::JacobiSVD<MatrixXd> svd(r.transpose() * l, Eigen::ComputeFullU | Eigen::ComputeFullV);
    out.lambda = svd.singularValues();
    if (out.lambda.minCoeff() <= 0.0) return false;
    const VectorXd inv_sqrt = out.lambda.cwiseSqrt().cwiseInverse();
    out.g = l * svd.matrixV() * inv_sqrt.asDiagonal();
    out.g_inv_t = r * svd.matrixU() * inv_sqrt.asDiagonal();
    out.w = out.g * out.g.transpose();
    symmetrize(out.w);
    return true;
}

// Largest alpha with X + alpha dX still PSD (infinity if dX does not decrease any direction).
double max_step_psd(const MatrixXd& x, const MatrixXd& dx) {
    Eigen::LLT<MatrixXd> llt(x);
    if (llt.info() != Eigen::Success) return 0.0;
    MatrixXd t = llt.matrixL().solve(dx);
    t = llt.matrixL().solve(t.transpose()).transpose().eval();
    symmetrize(t);
    Eigen::SelfAdjointEigenSolver<MatrixXd> es(t, Eigen::EigenvaluesOnly);
    const double lmin = es.eigenvalues()(0);
    return lmin < 0.0 ? -1.0 / lmin : std::numeric_limits<double>::infinity();
}

double max_step_lp(const VectorXd& x, const VectorXd& dx) {
    double a = std::numeric_limits<double>::infinity();
    for (Index i = 0; i < x.size(); ++i)
        if (dx(i) < 0.0) a = std::min(a, -x(i) / dx(i));
    return a;
}

double max_step(const Blocks& x, const Blocks& dx) {
    double a = max_step_lp(x.lp, dx.lp);
    for (std::size_t b = 0; b < x.psd.size(); ++b) a = std::min(a, max_step_psd(x.psd[b], dx.psd[b]));
    return a;
}

class Solver {
public:
    Solver(const ConicProgram& p, double tol, const SdpOptions& opts) : p_(p), tol_(tol), opts_(opts) {
        if (p.rhs.size() != static_cast<Index>(p.constraints.size()))
            throw DomainError("conic program rhs size does not match constraint count");
        std::size_t total = 0;
        for (auto n : p.psd_sizes) {
            if (n == 0) throw DomainError("PSD block sizes must be at least 1");
            total += n;
        }
        if (total > kMaxPsdDimension)
            throw CapacityError("total PSD dimension " + std::to_string(total) + " exceeds " +
                                std::to_string(kMaxPsdDimension));
        if (p.constraints.empty()) throw DomainError("conic program needs at least one constraint");
        nu_ = static_cast<double>(p.lp_size + total);
        c_sparse_ = split(p.objective, p.lp_size, p.psd_sizes);
        c_ = densify(c_sparse_, p.lp_size, p.psd_sizes);
        for (const auto& a : p.constraints) a_.push_back(split(a, p.lp_size, p.psd_sizes));
    }

    ConicSolution run();

private:
    Blocks a_transpose(const VectorXd& y) const {
        Blocks out = zeros_like(p_.lp_size, p_.psd_sizes);
        for (std::size_t i = 0; i < a_.size(); ++i) add_scaled(out, a_[i], y(static_cast<Index>(i)));
        return out;
    }
    VectorXd a_apply(const Blocks& x) const {
        VectorXd v(static_cast<Index>(a_.size()));
        for (std::size_t i = 0; i < a_.size(); ++i) v(static_cast<Index>(i)) = apply(a_[i], x);
        return v;
    }
    // W R W per block; LP block uses x/s.
    Blocks scale(const Blocks& r) const {
        Blocks out = r;
        out.lp = d_lp_.cwiseProduct(r.lp);
        for (std::size_t b = 0; b < r.psd.size(); ++b) {
            out.psd[b] = nt_[b].w * r.psd[b] * nt_[b].w;
            symmetrize(out.psd[b]);
        }
        return out;
    }
    MatrixXd schur() const;
    void direction(const Blocks& rc, const VectorXd& rp, const Blocks& rd, VectorXd& dy, Blocks& dx, Blocks& ds) const;

    const ConicProgram& p_;
    double tol_;
    SdpOptions opts_;
    double nu_ = 0.0;
    SparseBlocks c_sparse_;
    Blocks c_;
    std::vector<SparseBlocks> a_;

    std::vector<NtBlock> nt_;
    VectorXd d_lp_;
    Eigen::LDLT<MatrixXd> factor_;
};

MatrixXd Solver::schur() const {
    const auto m = static_cast<Index>(a_.size());
    MatrixXd mat = MatrixXd::Zero(m, m);
    for (Index j = 0; j < m; ++j) {
        const auto& aj = a_[static_cast<std::size_t>(j)];
        Blocks waw = zeros_like(p_.lp_size, p_.psd_sizes);
        for (auto [r, v] : aj.lp) waw.lp(r) += d_lp_(r) * v;
        for (std::size_t b = 0; b < aj.psd.size(); ++b) {
            const MatrixXd& w = nt_[b].w;
            for (const auto& t : aj.psd[b]) {
                if (t.row == t.col) {
                    waw.psd[b].noalias() += t.value * w.col(t.row) * w.col(t.row).transpose();
                } else {
                    waw.psd[b].noalias() += t.value * w.col(t.row) * w.col(t.col).transpose();
                    waw.psd[b].noalias() += t.value * w.col(t.col) * w.col(t.row).transpose();
                }
            }
        }
        for (Index i = j; i < m; ++i) {
            const double v = apply(a_[static_cast<std::size_t>(i)], waw);
            mat(i, j) = v;
            mat(j, i) = v;
        }
    }
    return mat;
}

// Solves  A dX = rp,  A^T dy + dS = rd,  dX + W dS W = rc.
void Solver::direction(const Blocks& rc, const VectorXd& rp, const Blocks& rd, VectorXd& dy, Blocks& dx,
                       Blocks& ds) const {
    const VectorXd h = rp - a_apply(rc) + a_apply(scale(rd));
    dy = factor_.solve(h);
    ds = rd;
    ds.axpy(-1.0, a_transpose(dy));
    dx = rc;
    dx.axpy(-1.0, scale(ds));
    for (auto& m : dx.psd) symmetrize(m);
    for (auto& m : ds.psd) symmetrize(m);
}

ConicSolution Solver::run() {
    const auto m = static_cast<Index>(a_.size());
    const VectorXd& b = p_.rhs;
    const double norm_b = b.norm();
    const double norm_c = c_.norm();
    double max_a = 0.0;
    for (const auto& a : a_) max_a = std::max(max_a, densify(a, p_.lp_size, p_.psd_sizes).norm());
    double xi = std::max(10.0, std::sqrt(nu_));
    for (Index i = 0; i < m; ++i) {
        const double an = densify(a_[static_cast<std::size_t>(i)], p_.lp_size, p_.psd_sizes).norm();
        xi = std::max(xi, (1.0 + std::fabs(b(i))) / (1.0 + an) * std::sqrt(nu_));
    }
    const double eta = std::max({10.0, std::sqrt(nu_), norm_c, max_a});

    Blocks x = zeros_like(p_.lp_size, p_.psd_sizes);
    Blocks s = x;
    x.lp.setConstant(xi);
    s.lp.setConstant(eta);
    for (std::size_t k = 0; k < x.psd.size(); ++k) {
        x.psd[k].diagonal().setConstant(xi);
        s.psd[k].diagonal().setConstant(eta);
    }
    VectorXd y = VectorXd::Zero(m);

    ConicSolution out;
    out.status = Status::numerical_failure;
    if (opts_.iterate_log)
        *opts_.iterate_log << "iter,pobj,dobj,relgap,pinf,dinf,mu,alpha_p,alpha_d,sigma\n";

    double alpha_p = 0.0, alpha_d = 0.0, sigma = 0.0;
    int stalls = 0;
    nt_.resize(p_.psd_sizes.size());

    for (int iter = 0;; ++iter) {
        const VectorXd rp = b - a_apply(x);
        Blocks rd = c_;
        rd.axpy(-1.0, a_transpose(y)).axpy(-1.0, s);
        const double pobj = c_.dot(x);
        const double dobj = b.dot(y);
        const double xs = x.dot(s);
        const double mu = xs / nu_;
        const double denom = 1.0 + std::fabs(pobj) + std::fabs(dobj);
        const double relgap = std::max(std::fabs(pobj - dobj), xs) / denom;
        const double pinf = rp.norm() / (1.0 + norm_b);
        const double dinf = rd.norm() / (1.0 + norm_c);

        out.history.push_back({iter, pobj, dobj, xs, pinf, dinf, std::fabs(y.dot(rp)) + std::fabs(rd.dot(x))});
        if (opts_.iterate_log) {
            *opts_.iterate_log << iter << ',' << pobj << ',' << dobj << ',' << relgap << ',' << pinf << ',' << dinf
                               << ',' << mu << ',' << alpha_p << ',' << alpha_d << ',' << sigma << '\n';
        }

        out.iterations = iter;
        out.objective = pobj;
        out.dual_objective = dobj;
        out.duality_gap = relgap;
        out.primal_residual = pinf;

        if (relgap <= tol_ && pinf <= tol_ && dinf <= tol_) {
            out.status = Status::optimal;
            break;
        }
        // Farkas-type certificates.
        const Blocks aty = a_transpose(y);
        if (dobj > 0.0) {
            Blocks r = aty;
            r.axpy(1.0, s);
            if (r.norm() / dobj < 1e-8) {
                out.status = Status::infeasible;
                out.certificate = y / dobj;
                out.message = "dual ray certifies primal infeasibility";
                break;
            }
        }
        if (pobj < 0.0 && a_apply(x).norm() / -pobj < 1e-8) {
            out.status = Status::unbounded;
            out.certificate = x.lp / -pobj;
            out.message = "primal ray certifies unboundedness";
            break;
        }
        if (iter >= opts_.max_iterations) {
            out.message = "iteration cap reached: relgap=" + std::to_string(relgap) + " pinf=" +
                          std::to_string(pinf) + " dinf=" + std::to_string(dinf);
            break;
        }

        // Scaling.
        bool ok = true;
        for (std::size_t k = 0; k < x.psd.size() && ok; ++k) ok = nt_scaling(x.psd[k], s.psd[k], nt_[k]);
        if (!ok) {
            out.message = "lost positive definiteness at iteration " + std::to_string(iter);
            break;
        }
        d_lp_ = x.lp.cwiseQuotient(s.lp);
        const MatrixXd schur_m = schur();
        factor_.compute(schur_m);
        if (factor_.info() != Eigen::Success) {
            out.message = "Schur complement factorization failed at iteration " + std::to_string(iter);
            break;
        }

        // Predictor (affine scaling).
        Blocks rc = x;
        rc.lp *= -1.0;
        for (auto& mb : rc.psd) mb *= -1.0;
        VectorXd dy;
        Blocks dx, ds;
        direction(rc, rp, rd, dy, dx, ds);
        const double ap_aff = std::min(1.0, max_step(x, dx));
        const double ad_aff = std::min(1.0, max_step(s, ds));
        Blocks xa = x, sa = s;
        xa.axpy(ap_aff, dx);
        sa.axpy(ad_aff, ds);
        const double mu_aff = xa.dot(sa) / nu_;
        sigma = std::clamp(std::pow(mu_aff / mu, 3.0), 0.0, 1.0);

        // Corrector, built in the NT-scaled space where the scaled iterate is diag(lambda).
        Blocks rc2 = zeros_like(p_.lp_size, p_.psd_sizes);
        for (Index i = 0; i < x.lp.size(); ++i)
            rc2.lp(i) = (sigma * mu - x.lp(i) * s.lp(i) - dx.lp(i) * ds.lp(i)) / s.lp(i);
        for (std::size_t k = 0; k < x.psd.size(); ++k) {
            const NtBlock& nt = nt_[k];
            const MatrixXd dxt = nt.g_inv_t.transpose() * dx.psd[k] * nt.g_inv_t;
            const MatrixXd dst = nt.g.transpose() * ds.psd[k] * nt.g;
            const MatrixXd prod = dxt * dst + dst * dxt;
            const Index n = prod.rows();
            MatrixXd rt(n, n);
            for (Index i = 0; i < n; ++i) {
                for (Index j = 0; j < n; ++j) {
                    double rhs = -prod(i, j);
                    if (i == j) rhs += 2.0 * (sigma * mu - nt.lambda(i) * nt.lambda(i));
                    rt(i, j) = rhs / (nt.lambda(i) + nt.lambda(j));
                }
            }
            symmetrize(rt);
            rc2.psd[k] = nt.g * rt * nt.g.transpose();
            symmetrize(rc2.psd[k]);
        }
        direction(rc2, rp, rd, dy, dx, ds);
        const double gamma = 0.9 + 0.09 * std::min(ap_aff, ad_aff);
        alpha_p = std::min(1.0, gamma * max_step(x, dx));
        alpha_d = std::min(1.0, gamma * max_step(s, ds));
        if (!(alpha_p > 0.0) || !(alpha_d > 0.0)) {
            out.message = "zero step length at iteration " + std::to_string(iter);
            break;
        }
        stalls = (alpha_p < 1e-8 && alpha_d < 1e-8) ? stalls + 1 : 0;
        if (stalls >= 3) {
            out.message = "step lengths stalled at iteration " + std::to_string(iter);
            break;
        }
        x.axpy(alpha_p, dx);
        s.axpy(alpha_d, ds);
        y += alpha_d * dy;
        for (auto& mb : x.psd) symmetrize(mb);
        for (auto& mb : s.psd) symmetrize(mb);
    }

    out.primal = x.lp;
    out.lp_slack = s.lp;
    out.dual = y;
    out.x_blocks = x.psd;
    out.s_blocks = s.psd;
    return out;
}

}  // namespace

bool psd_with_shift(const Eigen::MatrixXd& m, double shift) {
    Eigen::MatrixXd t = m;
    t.diagonal().array() += shift;
    Eigen::LLT<Eigen::MatrixXd> llt(t);
    return llt.info() == Eigen::Success;
}

ConicSolution solve_sdp(const ConicProgram& p, double tol, const SdpOptions& opts) {
    Solver solver(p, tol, opts);
    return solver.run();
}

}  // namespace phaserank::convex
