// study.cpp
#include "cweno/study.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace cweno {

namespace {

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.16e", v);
    return buf;
}

BoundaryCondition effective_bc(const BoundaryCondition& problem_bc,
                               const std::optional<BcKind>& override_bc) {
    if (!override_bc) return problem_bc;
    return BoundaryCondition{*override_bc, *override_bc};
}

void check_doubling(const std::vector<int>& ns) {
    if (ns.empty()) throw std::invalid_argument("convergence_study: empty resolution list");
    for (size_t k = 0; k < ns.size(); ++k) {
        if (ns[k] < 8) throw std::invalid_argument("convergence_study: resolutions must be >= 8");
        if (k > 0 && ns[k] != 2 * ns[k - 1])
            throw std::invalid_argument("convergence_study: resolutions must double");
    }
}

}  // namespace

ErrorNorms error_norms(const CellField1D& computed, const CellField1D& reference) {
    if (!computed.grid.same_layout(reference.grid) || computed.d != reference.d)
        throw std::invalid_argument("error_norms: fields live on different grids");
    ErrorNorms e;
    e.l1.assign(static_cast<size_t>(computed.d), 0.0);
    e.linf.assign(static_cast<size_t>(computed.d), 0.0);
    const double h = computed.grid.h();
    for (int j = 0; j < computed.grid.n; ++j)
        for (int r = 0; r < computed.d; ++r) {
            double diff = std::abs(computed.at(j, r) - reference.at(j, r));
            e.l1[static_cast<size_t>(r)] += diff * h;
            e.linf[static_cast<size_t>(r)] = std::max(e.linf[static_cast<size_t>(r)], diff);
        }
    return e;
}

ErrorNorms error_norms(const CellField2D& computed, const CellField2D& reference) {
    if (!computed.grid.same_layout(reference.grid) || computed.d != reference.d)
        throw std::invalid_argument("error_norms: fields live on different grids");
    ErrorNorms e;
    e.l1.assign(static_cast<size_t>(computed.d), 0.0);
    e.linf.assign(static_cast<size_t>(computed.d), 0.0);
    const double area = computed.grid.cell_area();
    for (int j = 0; j < computed.grid.ny; ++j)
        for (int i = 0; i < computed.grid.nx; ++i)
            for (int r = 0; r < computed.d; ++r) {
                double diff = std::abs(computed.at(i, j, r) - reference.at(i, j, r));
                e.l1[static_cast<size_t>(r)] += diff * area;
                e.linf[static_cast<size_t>(r)] = std::max(e.linf[static_cast<size_t>(r)], diff);
            }
    return e;
}

std::vector<ErrorReport> convergence_study(const std::string& problem_name,
                                           const std::vector<int>& resolutions,
                                           const StudyOptions& opt) {
    check_doubling(resolutions);
    std::vector<ErrorReport> reports;
    for (int n : resolutions) {
        auto t0 = std::chrono::steady_clock::now();
        RunOutput out = run_problem(problem_name, n, opt);
        auto t1 = std::chrono::steady_clock::now();
        if (!out.errors)
            throw std::invalid_argument("convergence_study: no exact reference for problem '" +
                                        problem_name + "'");
        ErrorReport r;
        r.n = n;
        r.l1 = out.errors->l1[0];
        r.linf = out.errors->linf[0];
        r.wall_seconds = std::chrono::duration<double>(t1 - t0).count();
        reports.push_back(r);
    }
    for (size_t k = 1; k < reports.size(); ++k) {
        reports[k].l1_order = std::log2(reports[k - 1].l1 / reports[k].l1);
        reports[k].linf_order = std::log2(reports[k - 1].linf / reports[k].linf);
    }
    return reports;
}

std::string convergence_csv(const std::vector<ErrorReport>& reports) {
    std::string s = "N,L1,L1_order,Linf,Linf_order\n";
    for (const auto& r : reports) {
        s += std::to_string(r.n) + ",";
        s += fmt(r.l1) + ",";
        s += std::isnan(r.l1_order) ? "" : fmt(r.l1_order);
        s += ",";
        s += fmt(r.linf) + ",";
        s += std::isnan(r.linf_order) ? "" : fmt(r.linf_order);
        s += "\n";
    }
    return s;
}

std::string profile_csv(const CellField1D& field, const std::vector<double>& center_weight,
                        const std::vector<std::string>& component_names) {
    if (static_cast<int>(component_names.size()) != field.d)
        throw std::invalid_argument("profile_csv: component name count mismatch");
    std::string s = "x";
    for (const auto& name : component_names) s += "," + name;
    s += ",w_center\n";
    for (int j = 0; j < field.grid.n; ++j) {
        s += fmt(field.grid.center(j));
        for (int r = 0; r < field.d; ++r) s += "," + fmt(field.at(j, r));
        s += "," + fmt(center_weight[static_cast<size_t>(j)]) + "\n";
    }
    return s;
}

std::string profile_csv(const CellField2D& field, const std::vector<double>& center_weight) {
    std::string s = "x,y,u,w_center\n";
    for (int j = 0; j < field.grid.ny; ++j)
        for (int i = 0; i < field.grid.nx; ++i) {
            s += fmt(field.grid.center_x(i)) + "," + fmt(field.grid.center_y(j));
            s += "," + fmt(field.at(i, j));
            s += "," + fmt(center_weight[static_cast<size_t>(j) * field.grid.nx + i]) + "\n";
        }
    return s;
}

ShockReport shock_report(const std::string& problem_name, int n, double lambda,
                         const StudyOptions& opt) {
    if (n < 100) throw std::invalid_argument("shock_report: need at least 100 cells");
    auto prob = find_problem_1d(problem_name);
    if (!prob || prob->law.d != 3)
        throw std::invalid_argument("shock_report: unknown shock-tube problem '" + problem_name +
                                    "'");
    StudyOptions o = opt;
    o.lambda = lambda;
    RunOutput out = run_problem(problem_name, n, o);

    ShockReport rep;
    rep.field = out.field_1d;
    rep.center_weight = out.center_weight;
    rep.l1_density = out.errors ? out.errors->l1[0] : 0.0;
    rep.run.final_field = out.field_1d;
    rep.run.center_weight = out.center_weight;
    rep.run.initial_courant = out.initial_courant;
    rep.run.max_courant = out.max_courant;
    rep.run.courant_warning = out.courant_warning;
    rep.run.steps = out.steps;
    rep.run.dt = out.dt;
    rep.csv = profile_csv(out.field_1d, out.center_weight, {"rho", "m", "E"});
    return rep;
}

RunOutput run_problem(const std::string& problem_name, int n, const StudyOptions& opt) {
    RunOutput out;
    if (auto p1 = find_problem_1d(problem_name)) {
        BoundaryCondition bc = effective_bc(p1->bc, opt.bc);
        SchemeParams sp = opt.scheme_params(*p1);
        double T = opt.t_final.value_or(p1->default_T);
        double lambda = opt.lambda.value_or(p1->default_lambda);
        CellField1D initial = make_initial(*p1, n);
        RunReport1D rep = run_1d(initial, p1->law, T, lambda, sp, bc);
        out.is_2d = false;
        out.initial_courant = rep.initial_courant;
        out.max_courant = rep.max_courant;
        out.courant_warning = rep.courant_warning;
        out.steps = rep.steps;
        out.dt = rep.dt;
        if (p1->exact_averages) {
            CellField1D ref = p1->exact_averages(initial.grid, T);
            out.errors = error_norms(rep.final_field, ref);
        }
        std::vector<std::string> names =
            (p1->law.d == 3) ? std::vector<std::string>{"rho", "m", "E"}
                             : std::vector<std::string>{"u"};
        out.csv = profile_csv(rep.final_field, rep.center_weight, names);
        out.center_weight = std::move(rep.center_weight);
        out.field_1d = std::move(rep.final_field);
        return out;
    }
    if (auto p2 = find_problem_2d(problem_name)) {
        BoundaryCondition bc = effective_bc(p2->bc, opt.bc);
        SchemeParams sp = opt.scheme_params(*p2);
        double T = opt.t_final.value_or(p2->default_T);
        double lambda = opt.lambda.value_or(p2->default_lambda);
        CellField2D initial = make_initial(*p2, n);
        RunReport2D rep = run_2d(initial, p2->law, T, lambda, sp, bc);
        out.is_2d = true;
        out.initial_courant = rep.initial_courant;
        out.max_courant = rep.max_courant;
        out.courant_warning = rep.courant_warning;
        out.steps = rep.steps;
        out.dt = rep.dt;
        if (p2->exact_averages) {
            CellField2D ref = p2->exact_averages(initial.grid, T);
            out.errors = error_norms(rep.final_field, ref);
        }
        out.csv = profile_csv(rep.final_field, rep.center_weight);
        out.center_weight = std::move(rep.center_weight);
        out.field_2d = std::move(rep.final_field);
        return out;
    }
    std::string msg = "unknown problem '" + problem_name + "'; valid names:";
    for (const auto& name : problem_names()) msg += " " + name;
    throw std::invalid_argument(msg);
}

}  // namespace cweno
