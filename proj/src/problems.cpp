// problems.cpp
#include "cweno/problems.hpp"

#include <cmath>

namespace cweno {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kLambdaTable1 = 0.9 * 3.0 / 7.0;

double sod_initial(double x, int r) {
    // (rho, m, E) = (1, 0, 2.5) left of 0.5, (0.125, 0, 0.25) right.
    static const double left[3] = {1.0, 0.0, 2.5};
    static const double right[3] = {0.125, 0.0, 0.25};
    return x < 0.5 ? left[r] : right[r];
}

double lax_initial(double x, int r) {
    static const double left[3] = {0.445, 0.311, 8.928};
    static const double right[3] = {0.5, 0.0, 1.4275};
    return x < 0.5 ? left[r] : right[r];
}

ExactSolution1D shifted_initial_solution(std::function<double(double)> u0, double xl, double xr) {
    ExactSolution1D sol;
    sol.d = 1;
    sol.eval = [u0 = std::move(u0), xl, xr](double x, double t, double* out) {
        out[0] = advection_exact(u0, 1.0, xl, xr, x, t);
    };
    return sol;
}

ExactSolution1D riemann_reference(double (*init)(double, int)) {
    EulerState left{init(0.0, 0), init(0.0, 1), init(0.0, 2), 1.4};
    EulerState right{init(1.0, 0), init(1.0, 1), init(1.0, 2), 1.4};
    RiemannSolution rs = euler_riemann_exact(left, right);
    ExactSolution1D sol;
    sol.d = 3;
    sol.eval = [rs](double x, double t, double* out) {
        auto u = (t > 0.0) ? rs.sample((x - 0.5) / t)
                           : std::array<double, 3>{x < 0.5 ? rs.rho_l : rs.rho_r,
                                                   x < 0.5 ? rs.rho_l * rs.u_l : rs.rho_r * rs.u_r,
                                                   0.0};
        out[0] = u[0];
        out[1] = u[1];
        out[2] = u[2];
    };
    sol.breakpoints = [rs](double t) {
        std::vector<double> b;
        for (double xi : rs.breakpoints()) b.push_back(0.5 + xi * t);
        return b;
    };
    return sol;
}

std::vector<Problem1D> build_problems_1d() {
    std::vector<Problem1D> v;

    {
        Problem1D p;
        p.name = "advection-sin";
        p.law = advection_law_1d();
        p.x_left = -1.0;
        p.x_right = 1.0;
        p.bc = {BcKind::periodic, BcKind::periodic};
        p.default_lambda = kLambdaTable1;
        p.default_T = 10.0;
        p.initial_point = [](double x, int) { return std::sin(kPi * x); };
        p.exact_averages = [](const Grid1D& g, double T) {
            auto sol = shifted_initial_solution([](double x) { return std::sin(kPi * x); },
                                                g.x_left, g.x_right);
            return exact_cell_averages(sol, g, T);
        };
        v.push_back(std::move(p));
    }
    {
        Problem1D p;
        p.name = "advection-sin4";
        p.law = advection_law_1d();
        p.x_left = -1.0;
        p.x_right = 1.0;
        p.bc = {BcKind::periodic, BcKind::periodic};
        p.default_lambda = kLambdaTable1;
        p.default_T = 1.0;
        p.initial_point = [](double x, int) { return std::pow(std::sin(kPi * x), 4); };
        p.exact_averages = [](const Grid1D& g, double T) {
            auto sol = shifted_initial_solution(
                [](double x) { return std::pow(std::sin(kPi * x), 4); }, g.x_left, g.x_right);
            return exact_cell_averages(sol, g, T);
        };
        v.push_back(std::move(p));
    }
    {
        Problem1D p;
        p.name = "burgers";
        p.law = burgers_law_1d();
        p.x_left = -1.0;
        p.x_right = 1.0;
        p.bc = {BcKind::periodic, BcKind::periodic};
        p.default_lambda = 0.66 * 3.0 / 7.0;
        p.default_T = 0.33;
        p.initial_point = [](double x, int) { return 1.0 + 0.5 * std::sin(kPi * x); };
        p.exact_averages = [](const Grid1D& g, double T) {
            ExactSolution1D sol;
            sol.d = 1;
            sol.t_max = 2.0 / kPi;
            sol.eval = [](double x, double t, double* out) {
                // u0 is 2-periodic, so the characteristic foot needs no wrapping.
                auto u0 = [](double s) { return 1.0 + 0.5 * std::sin(kPi * s); };
                auto u0p = [](double s) { return 0.5 * kPi * std::cos(kPi * s); };
                out[0] = burgers_exact_preshock(u0, u0p, 0.5, 1.5, 2.0 / kPi, x, t);
            };
            return exact_cell_averages(sol, g, T);
        };
        v.push_back(std::move(p));
    }
    {
        Problem1D p;
        p.name = "sod";
        p.law = euler_law_1d();
        p.x_left = 0.0;
        p.x_right = 1.0;
        p.bc = {BcKind::outflow, BcKind::outflow};
        p.default_lambda = 0.1;
        p.default_T = 0.16;
        p.initial_point = sod_initial;
        p.initial_breaks = {0.5};
        p.exact_averages = [](const Grid1D& g, double T) {
            return exact_cell_averages(riemann_reference(sod_initial), g, T);
        };
        v.push_back(std::move(p));
    }
    {
        Problem1D p;
        p.name = "lax";
        p.law = euler_law_1d();
        p.x_left = 0.0;
        p.x_right = 1.0;
        p.bc = {BcKind::outflow, BcKind::outflow};
        p.default_lambda = 0.1;
        p.default_T = 0.16;
        p.initial_point = lax_initial;
        p.initial_breaks = {0.5};
        p.exact_averages = [](const Grid1D& g, double T) {
            return exact_cell_averages(riemann_reference(lax_initial), g, T);
        };
        v.push_back(std::move(p));
    }
    return v;
}

std::vector<Problem2D> build_problems_2d() {
    std::vector<Problem2D> v;

    auto sin2sin2 = [](double x, double y) {
        double sx = std::sin(kPi * x), sy = std::sin(kPi * y);
        return sx * sx * sy * sy;
    };

    {
        Problem2D p;
        p.name = "advection2d";
        p.law = advection_law_2d();
        p.bc = {BcKind::periodic, BcKind::periodic};
        p.default_lambda = 0.425;
        p.default_T = 1.0;
        p.initial_point = sin2sin2;
        p.exact_averages = [sin2sin2](const Grid2D& g, double T) {
            ExactSolution2D sol;
            sol.d = 1;
            sol.eval = [sin2sin2, g](double x, double y, double t, double* out) {
                out[0] = advection_exact_2d(sin2sin2, 1.0, 1.0, g, x, y, t);
            };
            return exact_cell_averages(sol, g, T);
        };
        v.push_back(std::move(p));
    }
    {
        Problem2D p;
        p.name = "burgers2d";
        p.law = burgers_law_2d();
        p.bc = {BcKind::periodic, BcKind::periodic};
        p.default_lambda = 0.425;
        p.default_T = 1.5;
        p.initial_point = sin2sin2;
        v.push_back(std::move(p));
    }
    {
        Problem2D p;
        p.name = "rotation-2d";
        p.law = rotation_law_2d();
        p.bc = {BcKind::periodic, BcKind::periodic};
        p.default_lambda = 0.425;
        p.default_T = kPi / 2.0;  // a quarter turn at unit angular speed
        p.initial_point = [](double x, double y) {
            return (std::abs(x - 0.5) <= 0.25 && std::abs(y - 0.5) <= 0.25) ? 1.0 : 0.0;
        };
        p.initial_breaks_x = {0.25, 0.75};
        p.initial_breaks_y = {0.25, 0.75};
        v.push_back(std::move(p));
    }
    return v;
}

const std::vector<Problem1D>& problems_1d() {
    static const std::vector<Problem1D> v = build_problems_1d();
    return v;
}

const std::vector<Problem2D>& problems_2d() {
    static const std::vector<Problem2D> v = build_problems_2d();
    return v;
}

}  // namespace

std::optional<Problem1D> find_problem_1d(const std::string& name) {
    for (const auto& p : problems_1d())
        if (p.name == name) return p;
    return std::nullopt;
}

std::optional<Problem2D> find_problem_2d(const std::string& name) {
    for (const auto& p : problems_2d())
        if (p.name == name) return p;
    return std::nullopt;
}

bool is_problem_2d(const std::string& name) { return find_problem_2d(name).has_value(); }

std::vector<std::string> problem_names() {
    std::vector<std::string> names;
    for (const auto& p : problems_1d()) names.push_back(p.name);
    for (const auto& p : problems_2d()) names.push_back(p.name);
    return names;
}

CellField1D make_initial(const Problem1D& prob, int n) {
    Grid1D grid(n, prob.x_left, prob.x_right);
    ExactSolution1D sol;
    sol.d = prob.law.d;
    sol.eval = [&prob](double x, double, double* out) {
        for (int r = 0; r < prob.law.d; ++r) out[r] = prob.initial_point(x, r);
    };
    sol.breakpoints = [&prob](double) { return prob.initial_breaks; };
    CellField1D f = exact_cell_averages(sol, grid, 0.0);
    f.time = 0.0;
    return f;
}

CellField2D make_initial(const Problem2D& prob, int n) {
    Grid2D grid(n, n, prob.x_left, prob.x_right, prob.y_left, prob.y_right);
    CellField2D out(grid, 1, 0.0);
    auto edges = [](double a, double b, const std::vector<double>& breaks) {
        std::vector<double> e{a};
        for (double s : breaks)
            if (s > a && s < b) e.push_back(s);
        e.push_back(b);
        return e;
    };
    for (int j = 0; j < n; ++j) {
        double ya = grid.center_y(j) - 0.5 * grid.hy(), yb = ya + grid.hy();
        auto ye = edges(ya, yb, prob.initial_breaks_y);
        for (int i = 0; i < n; ++i) {
            double xa = grid.center_x(i) - 0.5 * grid.hx(), xb = xa + grid.hx();
            auto xe = edges(xa, xb, prob.initial_breaks_x);
            double acc = 0.0;
            for (size_t sy = 0; sy + 1 < ye.size(); ++sy)
                for (size_t sx = 0; sx + 1 < xe.size(); ++sx) {
                    double wy = ye[sy + 1] - ye[sy];
                    double wx = xe[sx + 1] - xe[sx];
                    auto fy = [&](double y) {
                        return gauss5_mean([&](double x) { return prob.initial_point(x, y); },
                                           xe[sx], xe[sx + 1]);
                    };
                    acc += wx * wy * gauss5_mean(fy, ye[sy], ye[sy + 1]);
                }
            out.at(i, j) = acc / grid.cell_area();
        }
    }
    return out;
}

}  // namespace cweno
