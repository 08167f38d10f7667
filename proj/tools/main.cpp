// main.cpp
// Command-line front end: single runs, grid-refinement studies, and
// shock-tube profiles, each written as CSV.
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "cweno/study.hpp"

namespace {

struct CommonFlags {
    std::string problem;
    double lambda = -1.0;
    double eps = -1.0;
    double t_final = -1.0;
    int p_exponent = 2;
    bool ideal_weights = false;
    std::string bc;
    std::string out = "-";
};

void add_common(CLI::App* cmd, CommonFlags& f) {
    cmd->add_option("--problem", f.problem, "problem name")->required();
    cmd->add_option("--lambda", f.lambda, "mesh ratio dt/h (default: per problem)");
    cmd->add_option("--eps", f.eps, "weight regularization epsilon (default 1e-2)");
    cmd->add_option("--p", f.p_exponent, "weight exponent p (default 2)");
    cmd->add_option("--t-final", f.t_final, "final time (default: per problem)");
    cmd->add_option("--bc", f.bc, "boundary condition override")
        ->check(CLI::IsMember({"periodic", "outflow"}));
    cmd->add_flag("--ideal-weights", f.ideal_weights, "force the constant ideal weights");
    cmd->add_option("--out", f.out, "output CSV path, '-' for stdout");
}

cweno::StudyOptions to_options(const CommonFlags& f) {
    cweno::StudyOptions opt;
    if (f.lambda > 0.0) opt.lambda = f.lambda;
    if (f.eps > 0.0) opt.epsilon = f.eps;
    if (f.t_final > 0.0) opt.t_final = f.t_final;
    if (f.bc == "periodic") opt.bc = cweno::BcKind::periodic;
    if (f.bc == "outflow") opt.bc = cweno::BcKind::outflow;
    opt.p_exponent = f.p_exponent;
    opt.ideal_weights = f.ideal_weights;
    return opt;
}

int write_output(const std::string& path, const std::string& csv) {
    if (path == "-") {
        std::cout << csv;
        return 0;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        std::cerr << "error: cannot open output file '" << path << "'\n";
        return 1;
    }
    out << csv;
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"staggered central solver for 1D/2D conservation laws"};
    app.require_subcommand(1);

    CommonFlags run_flags, conv_flags, shock_flags;
    int run_n = 200;
    std::vector<int> conv_ns;
    int shock_n = 200;

    CLI::App* run_cmd = app.add_subcommand("run", "single run, final field as CSV");
    add_common(run_cmd, run_flags);
    run_cmd->add_option("--n", run_n, "cells per axis")->required();

    CLI::App* conv_cmd = app.add_subcommand("converge", "refinement study, error table as CSV");
    add_common(conv_cmd, conv_flags);
    conv_cmd->add_option("--n", conv_ns, "comma-separated doubling resolutions")
        ->required()
        ->delimiter(',');

    CLI::App* shock_cmd = app.add_subcommand("shock", "shock-tube profile as CSV");
    add_common(shock_cmd, shock_flags);
    shock_cmd->add_option("--n", shock_n, "cells")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (run_cmd->parsed()) {
            auto out = cweno::run_problem(run_flags.problem, run_n, to_options(run_flags));
            if (out.courant_warning)
                std::cerr << "warning: initial Courant number " << out.initial_courant
                          << " exceeds the stability bound " << cweno::kCourantMax << "\n";
            if (out.errors) std::cerr << "L1 error vs exact: " << out.errors->l1[0] << "\n";
            return write_output(run_flags.out, out.csv);
        }
        if (conv_cmd->parsed()) {
            auto reports = cweno::convergence_study(conv_flags.problem, conv_ns,
                                                    to_options(conv_flags));
            return write_output(conv_flags.out, cweno::convergence_csv(reports));
        }
        auto rep = cweno::shock_report(shock_flags.problem, shock_n,
                                       shock_flags.lambda > 0.0 ? shock_flags.lambda : 0.1,
                                       to_options(shock_flags));
        std::cerr << "L1 density error vs exact Riemann solution: " << rep.l1_density << "\n";
        return write_output(shock_flags.out, rep.csv);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
