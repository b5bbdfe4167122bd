#include <cstdlib>
#include <fstream>

#include <CLI11.hpp>

#include "phaserank/cli.hpp"
#include "phaserank/errors.hpp"

namespace phaserank::cli {

namespace {

void add_matrix_options(CLI::App* sub, Command& cmd) {
    sub->add_option("--input,-i", cmd.input, "PhaseMatrix JSON file, or - for stdin");
    sub->add_option("--matrix,-m", cmd.matrix, "inline matrix such as \"1,1,1;1,i,-i;1,1,i\", or JSON text");
}

void add_common_options(CLI::App* sub, Command& cmd) {
    sub->add_option("--format,-f", cmd.format, "json, csv or svg")->check(CLI::IsMember({"json", "csv", "svg"}));
    sub->add_option("--out,-o", cmd.out, "write output to PATH instead of stdout");
    sub->add_option("--seed", cmd.seed, "random seed (default 0, or PHASERANK_SEED)");
    sub->add_option("--resolution,-r", cmd.resolution, "raster cells per axis")->check(CLI::PositiveNumber);
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"phase rank of complex phase matrices"};
    app.require_subcommand(1, 1);
    app.set_version_flag("--version", "phaserank 1.0");

    Command cmd;
    if (const char* env = std::getenv("PHASERANK_SEED")) {
        try {
            cmd.seed = std::stoull(env);
        } catch (const std::exception&) {
            err << "error: PHASERANK_SEED must be a non-negative integer\n";
            return kBadInput;
        }
    }

    struct Spec {
        const char* name;
        const char* help;
        bool matrix;
    };
    const Spec specs[] = {
        {"analyze", "bounds and exact decisions in one report", true},
        {"rank3", "exact phase rank of a 3x3 matrix", true},
        {"witness", "singular complex matrix with the given phases (3x3)", true},
        {"coverage", "certified torus coverage test for 3 x m matrices", true},
        {"colop-region", "raster of colopsided triples (1, e^iu, e^iv)", false},
        {"detvec-hull", "determinant monomials and their convex hull", true},
        {"scaling-search", "search for a row scaling with no colopsided column", true},
        {"sign-max", "is a +-1 matrix of maximal sign rank", true},
        {"volume", "Monte-Carlo fraction of colopsided n-tuples", false},
        {"upper-bound", "structural upper bound for n x m matrices", false},
        {"coamoeba-slice", "3x3 determinant coamoeba over free slots t1..t3", false},
    };
    for (const auto& s : specs) {
        auto* sub = app.add_subcommand(s.name, s.help);
        if (s.matrix) add_matrix_options(sub, cmd);
        add_common_options(sub, cmd);
        const std::string name = s.name;
        if (name == "analyze")
            sub->add_option("--bound", cmd.bounds, "forster, forster-star, gamma2 or upper (repeatable)")
                ->check(CLI::IsMember({"forster", "forster-star", "gamma2", "upper"}));
        if (name == "scaling-search") sub->add_option("--restarts", cmd.restarts, "random restarts")->check(CLI::PositiveNumber);
        if (name == "volume") {
            sub->add_option("--n", cmd.n, "tuple length")->required();
            sub->add_option("--samples", cmd.samples, "sample count")->check(CLI::PositiveNumber);
        }
        if (name == "upper-bound") {
            sub->add_option("--n", cmd.n, "rows")->required()->check(CLI::PositiveNumber);
            sub->add_option("--m", cmd.m, "columns")->required()->check(CLI::PositiveNumber);
        }
        if (name == "coamoeba-slice")
            sub->add_option("--template,-t", cmd.template_text, "3x3 template with slots t1, t2, t3")->required();
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kBadInput;
    }

    CLI::App* chosen = app.get_subcommands().front();
    cmd.name = chosen->get_name();
    cmd.resolution_set = chosen->count("--resolution") > 0;

    try {
        const Output o = execute(cmd);
        if (cmd.out.empty()) {
            out << o.body;
        } else {
            std::ofstream f(cmd.out, std::ios::binary);
            if (!f) throw DomainError("cannot write " + cmd.out);
            f << o.body;
        }
        return o.code;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << "\n";
        return kBadInput;
    } catch (const SolverError& e) {
        err << "solver failure: " << e.what() << "\n";
        return kSolverFailure;
    } catch (const CapacityError& e) {
        err << "capacity exceeded: " << e.what() << "\n";
        return kCapacity;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return kInternal;
    }
}

}  // namespace phaserank::cli
