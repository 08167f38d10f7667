// exact.hpp
// Reference solutions for error measurement: exact advection, pre-shock
// Burgers via characteristics, and the exact Riemann solution of the 1D
// Euler equations, plus high-order cell averaging of any evaluator.
#pragma once

#include <functional>
#include <limits>
#include <vector>

#include "cweno/field.hpp"
#include "cweno/laws.hpp"

namespace cweno {

// State evaluator (x, t) -> d components, valid for t < t_max.
struct ExactSolution1D {
    int d = 1;
    double t_max = std::numeric_limits<double>::infinity();
    std::function<void(double x, double t, double* state)> eval;
    // Positions of kinks/jumps at time t, for piecewise quadrature. May be empty.
    std::function<std::vector<double>(double t)> breakpoints;
};

struct ExactSolution2D {
    int d = 1;
    double t_max = std::numeric_limits<double>::infinity();
    std::function<void(double x, double y, double t, double* state)> eval;
};

// u0 evaluated at the foot of the characteristic, wrapped periodically.
double advection_exact(const std::function<double(double)>& u0, double speed, double x_left,
                       double x_right, double x, double t);
double advection_exact_2d(const std::function<double(double, double)>& u0, double speed_x,
                          double speed_y, const Grid2D& domain, double x, double y, double t);

// Solves u = u0(x - u t) by safeguarded Newton to 1e-13 residual. The caller
// supplies global bounds of u0 (a valid bracket) and the breaking time.
double burgers_exact_preshock(const std::function<double(double)>& u0,
                              const std::function<double(double)>& u0_prime, double u_lo,
                              double u_hi, double t_break, double x, double t);

// Exact solution of the Riemann problem for the 1D Euler equations.
struct RiemannSolution {
    double gamma = 1.4;
    // Primitive initial states (rho, u, p).
    double rho_l, u_l, p_l, rho_r, u_r, p_r;
    double p_star, u_star, rho_star_l, rho_star_r;
    bool left_is_shock = false, right_is_shock = false;
    double left_head, left_tail;    // x/t speeds; equal for a shock
    double right_tail, right_head;  // tail <= head

    // Conserved state (rho, m, E) at similarity coordinate xi = x/t.
    std::array<double, 3> sample(double xi) const;
    // Sorted wave positions in xi where the solution is not smooth.
    std::vector<double> breakpoints() const;
};

// Iterates on the star pressure to 1e-12; throws if vacuum would form.
RiemannSolution euler_riemann_exact(const EulerState& left, const EulerState& right);

// Per-cell means via 5-point Gauss-Legendre per axis, with optional splitting
// of cells at the solution's breakpoints (keeps the quadrature on smooth pieces).
CellField1D exact_cell_averages(const ExactSolution1D& sol, const Grid1D& grid, double t);
CellField2D exact_cell_averages(const ExactSolution2D& sol, const Grid2D& grid, double t);

// 5-point Gauss-Legendre approximation of the mean of f over [a, b].
double gauss5_mean(const std::function<double(double)>& f, double a, double b);

}  // namespace cweno
