// problems.hpp
// Built-in test problems: law, domain, exact initial cell averages, boundary
// conditions and per-problem defaults. Problem names are the stable
// identifiers used by the command-line tool.
#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "cweno/exact.hpp"
#include "cweno/field.hpp"
#include "cweno/laws.hpp"

namespace cweno {

struct Problem1D {
    std::string name;
    ConservationLaw1D law;
    double x_left = 0.0, x_right = 1.0;
    BoundaryCondition bc;
    double default_lambda = 0.4;
    double default_T = 1.0;
    double default_eps = 1e-2;
    // Pointwise initial data, component r at x.
    std::function<double(double x, int r)> initial_point;
    // Positions of initial discontinuities (cell averaging splits there).
    std::vector<double> initial_breaks;
    // Reference cell averages at time T; absent when no exact solution is used.
    std::function<CellField1D(const Grid1D&, double T)> exact_averages;
};

struct Problem2D {
    std::string name;
    ConservationLaw2D law;
    double x_left = 0.0, x_right = 1.0, y_left = 0.0, y_right = 1.0;
    BoundaryCondition bc;
    double default_lambda = 0.425;
    double default_T = 1.0;
    double default_eps = 1e-2;
    std::function<double(double x, double y)> initial_point;
    // Break lines per axis for exact averaging of discontinuous initial data.
    std::vector<double> initial_breaks_x, initial_breaks_y;
    std::function<CellField2D(const Grid2D&, double T)> exact_averages;
};

std::optional<Problem1D> find_problem_1d(const std::string& name);
std::optional<Problem2D> find_problem_2d(const std::string& name);
bool is_problem_2d(const std::string& name);
std::vector<std::string> problem_names();

// Exact initial cell averages on n cells (n x n in 2D): Gauss quadrature on
// smooth pieces, with cells split at the declared discontinuities.
CellField1D make_initial(const Problem1D& prob, int n);
CellField2D make_initial(const Problem2D& prob, int n);

}  // namespace cweno
