// exact.cpp
#include "cweno/exact.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace cweno {

namespace {

// 5-point Gauss-Legendre rule on [-1/2, 1/2] (nodes scaled by interval length).
constexpr int kGaussN = 5;
constexpr double kGaussNode[kGaussN] = {-0.453089922969332, -0.2692346550528415, 0.0,
                                        0.2692346550528415, 0.453089922969332};
constexpr double kGaussWeight[kGaussN] = {0.11846344252809454, 0.23931433524968324,
                                          0.28444444444444444, 0.23931433524968324,
                                          0.11846344252809454};

double wrap_periodic(double x, double lo, double hi) {
    double len = hi - lo;
    double y = std::fmod(x - lo, len);
    if (y < 0.0) y += len;
    return lo + y;
}

}  // namespace

double gauss5_mean(const std::function<double(double)>& f, double a, double b) {
    double mid = 0.5 * (a + b), len = b - a;
    double acc = 0.0;
    for (int q = 0; q < kGaussN; ++q) acc += kGaussWeight[q] * f(mid + kGaussNode[q] * len);
    return acc;
}

double advection_exact(const std::function<double(double)>& u0, double speed, double x_left,
                       double x_right, double x, double t) {
    return u0(wrap_periodic(x - speed * t, x_left, x_right));
}

double advection_exact_2d(const std::function<double(double, double)>& u0, double speed_x,
                          double speed_y, const Grid2D& domain, double x, double y, double t) {
    return u0(wrap_periodic(x - speed_x * t, domain.x_left, domain.x_right),
              wrap_periodic(y - speed_y * t, domain.y_left, domain.y_right));
}

double burgers_exact_preshock(const std::function<double(double)>& u0,
                              const std::function<double(double)>& u0_prime, double u_lo,
                              double u_hi, double t_break, double x, double t) {
    if (t >= t_break)
        throw std::domain_error("burgers_exact_preshock: t is past the breaking time");
    if (t == 0.0) return u0(x);
    auto g = [&](double u) { return u - u0(x - u * t); };
    double lo = u_lo, hi = u_hi;
    double glo = g(lo), ghi = g(hi);
    if (glo > 0.0 || ghi < 0.0)
        throw std::domain_error("burgers_exact_preshock: bracket does not contain a root");
    double u = 0.5 * (lo + hi);
    for (int it = 0; it < 200; ++it) {
        double r = g(u);
        if (std::abs(r) < 1e-13) return u;
        if (r > 0.0) hi = u; else lo = u;
        double dg = 1.0 + t * u0_prime(x - u * t);
        double step = (dg != 0.0) ? r / dg : 0.0;
        double next = u - step;
        if (!(next > lo) || !(next < hi)) next = 0.5 * (lo + hi);  // bisection fallback
        u = next;
    }
    if (std::abs(g(u)) < 1e-11) return u;  // nearly converged; accept within 100x target
    throw std::runtime_error("burgers_exact_preshock: root iteration did not converge");
}

namespace {

struct WaveSide {
    double rho, u, p, c;
};

// Toro's pressure function for one side: jump relation for a shock (p > p_k),
// Riemann-invariant relation for a rarefaction.
double pressure_fn(double p, const WaveSide& s, double gamma, double* deriv) {
    if (p > s.p) {
        double A = 2.0 / ((gamma + 1.0) * s.rho);
        double B = (gamma - 1.0) / (gamma + 1.0) * s.p;
        double sq = std::sqrt(A / (B + p));
        if (deriv) *deriv = sq * (1.0 - 0.5 * (p - s.p) / (B + p));
        return (p - s.p) * sq;
    }
    double pr = p / s.p;
    double z = (gamma - 1.0) / (2.0 * gamma);
    if (deriv) *deriv = std::pow(pr, -(gamma + 1.0) / (2.0 * gamma)) / (s.rho * s.c);
    return 2.0 * s.c / (gamma - 1.0) * (std::pow(pr, z) - 1.0);
}

}  // namespace

RiemannSolution euler_riemann_exact(const EulerState& left, const EulerState& right) {
    if (left.gamma != right.gamma)
        throw std::invalid_argument("euler_riemann_exact: mismatched gamma");
    const double gamma = left.gamma;
    WaveSide L{left.rho, left.velocity(), left.pressure(), 0.0};
    WaveSide R{right.rho, right.velocity(), right.pressure(), 0.0};
    if (!(L.rho > 0.0) || !(L.p > 0.0) || !(R.rho > 0.0) || !(R.p > 0.0))
        throw std::domain_error("euler_riemann_exact: inadmissible input state");
    L.c = std::sqrt(gamma * L.p / L.rho);
    R.c = std::sqrt(gamma * R.p / R.rho);

    const double du = R.u - L.u;
    if (2.0 * (L.c + R.c) / (gamma - 1.0) <= du)
        throw std::domain_error("euler_riemann_exact: vacuum forms between the states");

    // Two-rarefaction initial guess.
    double z = (gamma - 1.0) / (2.0 * gamma);
    double p0 = std::pow((L.c + R.c - 0.5 * (gamma - 1.0) * du) /
                             (L.c / std::pow(L.p, z) + R.c / std::pow(R.p, z)),
                         1.0 / z);
    if (!(p0 > 0.0)) p0 = 0.5 * (L.p + R.p);

    double p = p0;
    for (int it = 0; it < 200; ++it) {
        double dl, dr;
        double f = pressure_fn(p, L, gamma, &dl) + pressure_fn(p, R, gamma, &dr) + du;
        double pnew = p - f / (dl + dr);
        if (!(pnew > 0.0)) pnew = 0.5 * p;
        double change = 2.0 * std::abs(pnew - p) / (pnew + p);
        p = pnew;
        if (change < 1e-14) break;
        if (it == 199) throw std::runtime_error("euler_riemann_exact: p* iteration stalled");
    }

    RiemannSolution sol;
    sol.gamma = gamma;
    sol.rho_l = L.rho; sol.u_l = L.u; sol.p_l = L.p;
    sol.rho_r = R.rho; sol.u_r = R.u; sol.p_r = R.p;
    sol.p_star = p;
    sol.u_star = 0.5 * (L.u + R.u) +
                 0.5 * (pressure_fn(p, R, gamma, nullptr) - pressure_fn(p, L, gamma, nullptr));

    double gm = (gamma - 1.0) / (gamma + 1.0);
    sol.left_is_shock = p > L.p;
    if (sol.left_is_shock) {
        sol.rho_star_l = L.rho * ((p / L.p + gm) / (gm * p / L.p + 1.0));
        double s = L.u - L.c * std::sqrt((gamma + 1.0) / (2.0 * gamma) * p / L.p +
                                         (gamma - 1.0) / (2.0 * gamma));
        sol.left_head = sol.left_tail = s;
    } else {
        sol.rho_star_l = L.rho * std::pow(p / L.p, 1.0 / gamma);
        double c_star = L.c * std::pow(p / L.p, z);
        sol.left_head = L.u - L.c;
        sol.left_tail = sol.u_star - c_star;
    }
    sol.right_is_shock = p > R.p;
    if (sol.right_is_shock) {
        sol.rho_star_r = R.rho * ((p / R.p + gm) / (gm * p / R.p + 1.0));
        double s = R.u + R.c * std::sqrt((gamma + 1.0) / (2.0 * gamma) * p / R.p +
                                         (gamma - 1.0) / (2.0 * gamma));
        sol.right_head = sol.right_tail = s;
    } else {
        sol.rho_star_r = R.rho * std::pow(p / R.p, 1.0 / gamma);
        double c_star = R.c * std::pow(p / R.p, z);
        sol.right_head = R.u + R.c;
        sol.right_tail = sol.u_star + c_star;
    }
    return sol;
}

std::array<double, 3> RiemannSolution::sample(double xi) const {
    const double g = gamma;
    double rho, u, p;
    if (xi <= left_head) {
        rho = rho_l; u = u_l; p = p_l;
    } else if (xi < left_tail) {  // inside the left fan
        double c_l = std::sqrt(g * p_l / rho_l);
        u = 2.0 / (g + 1.0) * (c_l + 0.5 * (g - 1.0) * u_l + xi);
        double c = 2.0 / (g + 1.0) * (c_l + 0.5 * (g - 1.0) * (u_l - xi));
        rho = rho_l * std::pow(c / c_l, 2.0 / (g - 1.0));
        p = p_l * std::pow(c / c_l, 2.0 * g / (g - 1.0));
    } else if (xi <= u_star) {
        rho = rho_star_l; u = u_star; p = p_star;
    } else if (xi < right_tail) {
        rho = rho_star_r; u = u_star; p = p_star;
    } else if (xi < right_head) {  // inside the right fan
        double c_r = std::sqrt(g * p_r / rho_r);
        u = 2.0 / (g + 1.0) * (-c_r + 0.5 * (g - 1.0) * u_r + xi);
        double c = 2.0 / (g + 1.0) * (c_r - 0.5 * (g - 1.0) * (u_r - xi));
        rho = rho_r * std::pow(c / c_r, 2.0 / (g - 1.0));
        p = p_r * std::pow(c / c_r, 2.0 * g / (g - 1.0));
    } else {
        rho = rho_r; u = u_r; p = p_r;
    }
    return {rho, rho * u, p / (g - 1.0) + 0.5 * rho * u * u};
}

std::vector<double> RiemannSolution::breakpoints() const {
    std::vector<double> b{left_head, left_tail, u_star, right_tail, right_head};
    std::sort(b.begin(), b.end());
    b.erase(std::unique(b.begin(), b.end()), b.end());
    return b;
}

CellField1D exact_cell_averages(const ExactSolution1D& sol, const Grid1D& grid, double t) {
    if (t > sol.t_max)
        throw std::domain_error("exact_cell_averages: t outside the validity window");
    CellField1D out(grid, sol.d, t);
    std::vector<double> breaks;
    if (sol.breakpoints) breaks = sol.breakpoints(t);
    std::sort(breaks.begin(), breaks.end());
    std::vector<double> state(static_cast<size_t>(sol.d));
    std::vector<double> edges;
    for (int j = 0; j < grid.n; ++j) {
        double a = grid.center(j) - 0.5 * grid.h();
        double b = a + grid.h();
        edges.assign({a});
        for (double s : breaks)
            if (s > a && s < b) edges.push_back(s);
        edges.push_back(b);
        for (int r = 0; r < sol.d; ++r) out.at(j, r) = 0.0;
        for (size_t e = 0; e + 1 < edges.size(); ++e) {
            double lo = edges[e], hi = edges[e + 1];
            double mid = 0.5 * (lo + hi), len = hi - lo;
            for (int q = 0; q < kGaussN; ++q) {
                sol.eval(mid + kGaussNode[q] * len, t, state.data());
                for (int r = 0; r < sol.d; ++r)
                    out.at(j, r) += kGaussWeight[q] * len * state[static_cast<size_t>(r)];
            }
        }
        for (int r = 0; r < sol.d; ++r) out.at(j, r) /= grid.h();
    }
    return out;
}

CellField2D exact_cell_averages(const ExactSolution2D& sol, const Grid2D& grid, double t) {
    if (t > sol.t_max)
        throw std::domain_error("exact_cell_averages: t outside the validity window");
    CellField2D out(grid, sol.d, t);
    std::vector<double> state(static_cast<size_t>(sol.d));
    for (int j = 0; j < grid.ny; ++j) {
        double yc = grid.center_y(j);
        for (int i = 0; i < grid.nx; ++i) {
            double xc = grid.center_x(i);
            for (int r = 0; r < sol.d; ++r) out.at(i, j, r) = 0.0;
            for (int qy = 0; qy < kGaussN; ++qy)
                for (int qx = 0; qx < kGaussN; ++qx) {
                    sol.eval(xc + kGaussNode[qx] * grid.hx(), yc + kGaussNode[qy] * grid.hy(), t,
                             state.data());
                    double w = kGaussWeight[qx] * kGaussWeight[qy];
                    for (int r = 0; r < sol.d; ++r) out.at(i, j, r) += w * state[static_cast<size_t>(r)];
                }
        }
    }
    return out;
}

}  // namespace cweno
