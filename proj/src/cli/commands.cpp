#include <cmath>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <thread>

#include "phaserank/bounds.hpp"
#include "phaserank/cli.hpp"
#include "phaserank/colop.hpp"
#include "phaserank/detvec.hpp"
#include "phaserank/errors.hpp"
#include "phaserank/plot.hpp"
#include "phaserank/rank3.hpp"
#include "phaserank/scaling.hpp"

namespace phaserank::cli {

namespace {

using io::json;

constexpr int kBoundDigits = 4;
constexpr std::size_t kDefaultSliceResolution = 64;

const char* const kDark = "#1f2a44";
const char* const kLight = "#e8ecf4";
const char* const kAlert = "#c0392b";

double rounded(double x) { return io::round_half_even(x, kBoundDigits); }

std::string slurp(std::istream& in) { return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()}; }

PhaseMatrix load_matrix(const Command& cmd) {
    if (!cmd.input.empty() && !cmd.matrix.empty()) throw DomainError("give either --input or --matrix, not both");
    std::string text;
    if (!cmd.matrix.empty()) {
        text = cmd.matrix;
        const auto first = text.find_first_not_of(" \t\n");
        if (first == std::string::npos || text[first] != '{') return io::parse_inline_matrix(text);
    } else if (cmd.input == "-") {
        text = slurp(std::cin);
    } else if (!cmd.input.empty()) {
        std::ifstream f(cmd.input);
        if (!f) throw DomainError("cannot read " + cmd.input);
        text = slurp(f);
    } else {
        throw DomainError(cmd.name + " needs a matrix: --input PATH or --matrix TEXT");
    }
    return io::parse_phase_matrix(text);
}

void require_format(const Command& cmd, std::initializer_list<const char*> allowed) {
    for (const char* f : allowed)
        if (cmd.format == f) return;
    std::string list;
    for (const char* f : allowed) list += std::string(list.empty() ? "" : ", ") + f;
    throw DomainError(cmd.name + " supports --format " + list + ", got " + cmd.format);
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

std::string csv_header(const std::vector<std::string>& methods) {
    std::string out;
    for (const auto& m : methods) out += "# method: " + m + "\n";
    return out;
}

std::string svg_with_provenance(const std::string& svg, const std::vector<std::string>& methods) {
    std::string head;
    for (const auto& m : methods) head += "<!-- method: " + m + " -->\n";
    return head + svg;
}

std::string fmt(double v) {
    std::ostringstream o;
    o.precision(17);
    o << v;
    return o.str();
}

json report_json(const RankReport& r) {
    json j;
    j["n"] = r.n;
    j["m"] = r.m;
    j["rank_one"] = r.rank_one;
    j["exact"] = r.exact ? json(*r.exact) : json(nullptr);
    j["forster_lb"] = r.forster_lb ? json(rounded(*r.forster_lb)) : json(nullptr);
    j["forster_star_lb"] = r.forster_star_lb ? json(rounded(*r.forster_star_lb)) : json(nullptr);
    j["gamma2_lb"] = r.gamma2_lb ? json(rounded(*r.gamma2_lb)) : json(nullptr);
    j["ceil_lb"] = r.ceil_lb;
    j["structural_ub"] = r.structural_ub ? json(*r.structural_ub) : json(nullptr);
    j["k_star"] = r.k_star ? json(*r.k_star) : json(nullptr);
    j["combined_ub"] = r.combined_ub;
    j["colopsided"] = r.colopsided ? json(*r.colopsided) : json(nullptr);
    j["colopsided_minor_lb"] = r.colopsided_minor_lb ? json(*r.colopsided_minor_lb) : json(nullptr);
    j["coverage_verdict"] = r.coverage_verdict ? json(*r.coverage_verdict) : json(nullptr);
    j["sign_rank_maximal"] = r.sign_rank_maximal ? json(*r.sign_rank_maximal) : json(nullptr);
    j["boundary_flag"] = r.boundary;
    j["inconsistent"] = r.inconsistent;
    j["notes"] = r.notes;
    j["errors"] = r.errors;
    j["provenance"] = r.provenance;
    return j;
}

Output analyze_cmd(const Command& cmd) {
    require_format(cmd, {"json"});
    const auto theta = load_matrix(cmd);
    AnalyzeOptions opts;
    opts.coverage_resolution = cmd.resolution;
    if (!cmd.bounds.empty()) {
        opts.forster = opts.forster_star = opts.gamma2 = opts.upper = false;
        for (const auto& b : cmd.bounds) {
            if (b == "forster") opts.forster = true;
            else if (b == "forster-star") opts.forster_star = true;
            else if (b == "gamma2") opts.gamma2 = true;
            else if (b == "upper") opts.upper = true;
            else throw DomainError("unknown bound '" + b + "'; expected forster, forster-star, gamma2 or upper");
        }
    }
    const auto r = analyze(theta, opts);
    return {dump(report_json(r)), r.solver_failed ? kSolverFailure : kOk};
}

Output rank3_cmd(const Command& cmd) {
    require_format(cmd, {"json"});
    const auto theta = load_matrix(cmd);
    const auto d = decide_rank3(theta);
    json j;
    j["rank"] = d.rank;
    j["certificate"] = to_string(d.certificate);
    j["lp_margin"] = d.lp_margin;
    j["boundary_flag"] = d.boundary;
    j["witness"] = nullptr;
    j["det_residual"] = nullptr;
    if (d.rank < 3) {
        const auto w = witness_rank3(theta);
        j["witness"] = io::to_json(w->m);
        j["det_residual"] = w->det_residual;
    }
    j["provenance"] = {{"rank", d.rank == 1 ? "vanishing 2x2 minors"
                                            : "relative-interior LP on the determinant monomials"},
                       {"witness", "balanced monomial weights and minimum-norm log-modulus solve"}};
    return {dump(j)};
}

Output witness_cmd(const Command& cmd) {
    require_format(cmd, {"json"});
    const auto theta = load_matrix(cmd);
    const auto w = witness_rank3(theta);
    json j;
    j["input"] = io::to_json(theta);
    if (!w) {
        j["rank"] = 3;
        j["witness"] = nullptr;
        j["message"] = "rank is 3: the determinant is colopsided";
    } else {
        Eigen::JacobiSVD<ComplexMatrix> svd(w->m);
        const auto sv = svd.singularValues();
        j["rank"] = decide_rank3(theta).rank;
        j["witness"] = io::to_json(w->m);
        j["det_residual"] = w->det_residual;
        j["sigma_ratio"] = sv(2) / sv(0);
        j["row_permutation_applied"] = w->row_permutation_applied;
    }
    j["provenance"] = {{"witness", "balanced monomial weights and minimum-norm log-modulus solve"}};
    return {dump(j)};
}

Output coverage_cmd(const Command& cmd) {
    require_format(cmd, {"json", "csv", "svg"});
    auto theta = load_matrix(cmd);
    if (theta.rows() != 3 && theta.cols() == 3) theta = theta.transposed();
    const auto cert = coverage_check_3xm(theta, cmd.resolution);
    const std::vector<std::string> methods = {
        "certified torus coverage: cell covered when some column margin exceeds L*h/2 with L = 2",
        "uncovered cells re-verified with the exact angular-gap oracle"};
    const auto& g = cert.grid;
    const double h = g.resolution ? g.cell_width() : 0.0;
    if (cmd.format == "csv") {
        std::string out = csv_header(methods) + "s,t,status\n";
        for (std::size_t j = 0; j < g.resolution; ++j)
            for (std::size_t i = 0; i < g.resolution; ++i)
                out += fmt((static_cast<double>(i) + 0.5) * h) + "," + fmt((static_cast<double>(j) + 0.5) * h) + "," +
                       to_string(g.at(i, j)) + "\n";
        return {out};
    }
    if (cmd.format == "svg") {
        std::vector<plot::RasterPanel> panels;
        if (g.resolution) {
            plot::RasterPanel p{std::string("coverage: ") + to_string(cert.verdict), g.resolution, {}};
            for (auto c : g.cells) p.values.push_back(static_cast<std::uint8_t>(c));
            panels.push_back(std::move(p));
        }
        const plot::RasterStyle style{{kDark, kLight, kAlert},
                                      {"covered", "uncovered (witness)", "unresolved"},
                                      "s (row 2 rotation)",
                                      "t (row 3 rotation)"};
        return {svg_with_provenance(plot::raster_svg(panels, style), methods)};
    }
    json j;
    j["verdict"] = to_string(cert.verdict);
    j["precondition_ok"] = cert.precondition_ok;
    j["rank_one_after_deleting_row"] =
        cert.rank_one_after_deleting_row ? json(*cert.rank_one_after_deleting_row) : json(nullptr);
    j["resolution"] = g.resolution;
    j["covered_cells"] = cert.covered_cells;
    j["witness_cells"] = cert.witness_cells;
    j["unresolved_cells"] = cert.unresolved_cells;
    j["refined_cells"] = cert.refined_cells;
    j["min_covered_slack"] = cert.min_covered_slack;
    if (g.witness) {
        ScalingVector y;
        y.scalars = {Angle{}, g.witness->first, g.witness->second};
        j["witness"] = {{"s", g.witness->first.radians()}, {"t", g.witness->second.radians()}};
        j["witness_scaling"] = io::to_json(y);
    } else {
        j["witness"] = nullptr;
    }
    j["provenance"] = methods;
    return {dump(j)};
}

Output colop_region_cmd(const Command& cmd) {
    require_format(cmd, {"json", "csv", "svg"});
    const std::size_t r = cmd.resolution;
    const auto raster = colop3_region_raster(r);
    const std::vector<std::string> methods = {"{1, e^{iu}, e^{iv}} colopsided by the angular-gap oracle"};
    const double h = kTwoPi / static_cast<double>(r);
    if (cmd.format == "csv") {
        std::string out = csv_header(methods) + "u,v,member\n";
        for (std::size_t j = 0; j < r; ++j)
            for (std::size_t i = 0; i < r; ++i)
                out += fmt((static_cast<double>(i) + 0.5) * h) + "," + fmt((static_cast<double>(j) + 0.5) * h) + "," +
                       std::to_string(raster[j * r + i]) + "\n";
        return {out};
    }
    if (cmd.format == "svg") {
        const plot::RasterStyle style{{kLight, kDark}, {"not colopsided", "colopsided"}, "u", "v"};
        return {svg_with_provenance(plot::raster_svg({{"colopsided triples (1, e^{iu}, e^{iv})", r, raster}}, style),
                                    methods)};
    }
    std::size_t members = 0;
    for (auto v : raster) members += v;
    json j;
    j["resolution"] = r;
    j["member_cells"] = members;
    j["member_fraction"] = static_cast<double>(members) / static_cast<double>(raster.size());
    j["provenance"] = methods;
    return {dump(j)};
}

Output detvec_hull_cmd(const Command& cmd) {
    require_format(cmd, {"json", "csv", "svg"});
    const auto theta = load_matrix(cmd);
    const auto data = hull_plot_data(theta);
    const bool colop = matrix_is_colopsided(theta);
    const std::vector<std::string> methods = {"signed determinant monomials, merged within 1e-9",
                                              "colopsidedness by the angular-gap oracle"};
    if (cmd.format == "csv") {
        std::string out = csv_header(methods) + "re,im,multiplicity,is_hull_vertex\n";
        for (const auto& p : data.points)
            out += fmt(p.point.real()) + "," + fmt(p.point.imag()) + "," + std::to_string(p.multiplicity) + "," +
                   (p.is_hull_vertex ? "1" : "0") + "\n";
        return {out};
    }
    if (cmd.format == "svg") {
        return {svg_with_provenance(
            plot::hull_svg(data, colop ? "determinant monomials: colopsided" : "determinant monomials: not colopsided"),
            methods)};
    }
    const auto v = det_monomial_vector(theta);
    json terms = json::array();
    for (const auto& t : v.terms)
        terms.push_back({{"permutation", t.permutation}, {"sign", t.sign}, {"phase", t.phase.radians()}});
    json points = json::array();
    for (const auto& p : data.points)
        points.push_back({{"re", p.point.real()},
                          {"im", p.point.imag()},
                          {"multiplicity", p.multiplicity},
                          {"is_hull_vertex", p.is_hull_vertex}});
    json j;
    j["n"] = v.n;
    j["terms"] = terms;
    j["points"] = points;
    j["hull_cycle"] = data.hull_cycle;
    j["colopsided"] = colop;
    j["provenance"] = methods;
    return {dump(j)};
}

Output scaling_search_cmd(const Command& cmd) {
    require_format(cmd, {"json"});
    const auto theta = load_matrix(cmd);
    ScalingSearchOptions opts;
    opts.restarts = cmd.restarts;
    opts.seed = cmd.seed;
    const auto y = search_noncolopsided_scaling(theta, opts);
    json j;
    j["found"] = y.has_value();
    j["scaling"] = y ? io::to_json(*y) : json(nullptr);
    j["seed"] = cmd.seed;
    j["restarts"] = cmd.restarts;
    j["provenance"] = {"multi-start coordinate descent on the shifted gap hinge",
                       "returned scaling re-verified with the exact angular-gap oracle"};
    return {dump(j)};
}

Output sign_max_cmd(const Command& cmd) {
    require_format(cmd, {"json"});
    auto theta = load_matrix(cmd);
    if (theta.rows() > theta.cols()) theta = theta.transposed();
    SignMatrix s{theta.rows(), theta.cols(), {}};
    for (Angle a : theta.entries()) {
        if (circular_distance(a, Angle{}) < 1e-12) s.entries.push_back(1);
        else if (circular_distance(a, Angle(kPi)) < 1e-12) s.entries.push_back(-1);
        else throw DomainError("sign-max needs a matrix with entries 1 and -1");
    }
    json j;
    j["sign_rank_maximal"] = sign_rank_is_maximal(s);
    j["provenance"] = {"unisigned column under every {-1,0,1} row scaling"};
    return {dump(j)};
}

Output volume_cmd(const Command& cmd) {
    require_format(cmd, {"json"});
    const double f = colop_volume_fraction(cmd.n, cmd.samples, cmd.seed);
    const double expected = static_cast<double>(cmd.n) / std::ldexp(1.0, static_cast<int>(cmd.n) - 1);
    json j;
    j["n"] = cmd.n;
    j["samples"] = cmd.samples;
    j["seed"] = cmd.seed;
    j["fraction"] = rounded(f);
    j["expected"] = rounded(expected);
    j["std_error"] = std::sqrt(expected * (1.0 - expected) / static_cast<double>(cmd.samples));
    j["provenance"] = {"Monte-Carlo sampling of uniform phase tuples, angular-gap oracle"};
    return {dump(j)};
}

Output upper_bound_cmd(const Command& cmd) {
    require_format(cmd, {"json"});
    const auto lo = std::min(cmd.n, cmd.m), hi = std::max(cmd.n, cmd.m);
    const auto b = structural_upper_bound(lo, hi);
    json j;
    j["n"] = cmd.n;
    j["m"] = cmd.m;
    j["k_star"] = b.k_star;
    j["bound"] = b.bound;
    j["lambert_bracket"] = {b.lambert_lower, b.lambert_upper};
    j["provenance"] = {"least k with m*k < 2^(k-1), bound n - floor((n-1)/(k-1))",
                       "Lambert-W estimate of k bracketing the scan"};
    return {dump(j)};
}

Output coamoeba_slice_cmd(const Command& cmd) {
    require_format(cmd, {"json", "csv", "svg"});
    if (cmd.template_text.empty()) throw DomainError("coamoeba-slice needs --template");
    const auto t = io::parse_template(cmd.template_text);
    const std::size_t r = cmd.resolution_set ? cmd.resolution : kDefaultSliceResolution;
    const auto slice = coamoeba_slice(t, r);
    const std::vector<std::string> methods = {"3x3 relative-interior test on the determinant monomials"};
    const double h = kTwoPi / static_cast<double>(r);
    std::size_t members = 0;
    for (auto v : slice.member) members += v;

    if (cmd.format == "csv") {
        std::string out = csv_header(methods);
        for (std::size_t k = 0; k < slice.slots; ++k) out += "t" + std::to_string(k + 1) + ",";
        out += "member\n";
        for (std::size_t idx = 0; idx < slice.member.size(); ++idx) {
            std::size_t rest = idx;
            for (std::size_t k = 0; k < slice.slots; ++k, rest /= r)
                out += fmt(static_cast<double>(rest % r) * h) + ",";
            out += std::to_string(slice.member[idx]) + "\n";
        }
        return {out};
    }
    if (cmd.format == "svg") {
        if (slice.slots < 2) throw DomainError("an SVG slice needs at least two free slots");
        std::vector<plot::RasterPanel> panels;
        const std::size_t layers = slice.slots == 3 ? 4 : 1;
        for (std::size_t q = 0; q < layers; ++q) {
            const std::size_t k3 = q * r / layers;
            plot::RasterPanel p;
            p.resolution = r;
            p.title = slice.slots == 3 ? "t3 = " + fmt(io::round_half_even(static_cast<double>(k3) * h, 4))
                                       : "coamoeba slice";
            p.values.assign(slice.member.begin() + static_cast<std::ptrdiff_t>(k3 * r * r),
                            slice.member.begin() + static_cast<std::ptrdiff_t>((k3 + 1) * r * r));
            panels.push_back(std::move(p));
        }
        const plot::RasterStyle style{{kLight, kDark}, {"phase rank 3", "phase rank below 3"}, "t1", "t2"};
        return {svg_with_provenance(plot::raster_svg(panels, style), methods)};
    }
    json j;
    j["slots"] = slice.slots;
    j["resolution"] = r;
    j["points"] = slice.member.size();
    j["member_points"] = members;
    j["complement_points"] = slice.member.size() - members;
    j["provenance"] = methods;
    return {dump(j)};
}

}  // namespace

Slice coamoeba_slice(const io::MatrixTemplate& t, std::size_t resolution) {
    if (t.rows != 3 || t.cols != 3) throw DomainError("coamoeba slices need a 3x3 template");
    if (t.slot_count > 3) throw DomainError("at most three free slots");
    if (resolution == 0) throw DomainError("slice resolution must be positive");
    Slice s;
    s.slots = t.slot_count;
    s.resolution = resolution;
    std::size_t total = 1;
    for (std::size_t k = 0; k < s.slots; ++k) total *= resolution;
    s.member.assign(total, 0);
    const double h = kTwoPi / static_cast<double>(resolution);

    // Each worker owns a contiguous block of indices; output is independent of the split.
    const std::size_t workers = std::max<std::size_t>(1, std::min<std::size_t>(std::thread::hardware_concurrency(),
                                                                              total / 4096 + 1));
    auto work = [&](std::size_t begin, std::size_t end) {
        std::vector<double> values(s.slots);
        for (std::size_t idx = begin; idx < end; ++idx) {
            std::size_t rest = idx;
            for (std::size_t k = 0; k < s.slots; ++k, rest /= resolution)
                values[k] = static_cast<double>(rest % resolution) * h;
            s.member[idx] = decide_rank3(t.fill(values)).rank < 3 ? 1 : 0;
        }
    };
    std::vector<std::thread> pool;
    const std::size_t chunk = (total + workers - 1) / workers;
    for (std::size_t w = 0; w < workers; ++w) {
        const std::size_t b = w * chunk, e = std::min(total, b + chunk);
        if (b < e) pool.emplace_back(work, b, e);
    }
    for (auto& th : pool) th.join();
    return s;
}

Output execute(const Command& cmd) {
    if (cmd.name == "analyze") return analyze_cmd(cmd);
    if (cmd.name == "rank3") return rank3_cmd(cmd);
    if (cmd.name == "witness") return witness_cmd(cmd);
    if (cmd.name == "coverage") return coverage_cmd(cmd);
    if (cmd.name == "colop-region") return colop_region_cmd(cmd);
    if (cmd.name == "detvec-hull") return detvec_hull_cmd(cmd);
    if (cmd.name == "scaling-search") return scaling_search_cmd(cmd);
    if (cmd.name == "sign-max") return sign_max_cmd(cmd);
    if (cmd.name == "volume") return volume_cmd(cmd);
    if (cmd.name == "upper-bound") return upper_bound_cmd(cmd);
    if (cmd.name == "coamoeba-slice") return coamoeba_slice_cmd(cmd);
    throw DomainError("unknown subcommand '" + cmd.name + "'");
}

}  // namespace phaserank::cli
