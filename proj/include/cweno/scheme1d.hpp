// scheme1d.hpp
// Staggered central evolution in 1D: reconstruct, predict point values with
// the Runge-Kutta dense-output step, integrate fluxes with Simpson's rule,
// and project on the staggered cells.
#pragma once

#include <optional>
#include <vector>

#include "cweno/field.hpp"
#include "cweno/laws.hpp"
#include "cweno/nce.hpp"
#include "cweno/reconstruct1d.hpp"

namespace cweno {

inline constexpr double kCourantMax = 3.0 / 7.0;

struct SchemeParams {
    CwenoParams cweno;
    double courant_max = kCourantMax;
};

struct StepDiagnostics {
    double max_courant = 0.0;
    bool courant_exceeded = false;
    std::vector<double> min_u, max_u;       // per component
    std::vector<double> center_weight;      // w_C per interior cell
};

struct RunReport1D {
    CellField1D final_field;
    std::vector<double> center_weight;  // w_C per cell at the final time
    double initial_courant = 0.0;
    double max_courant = 0.0;
    bool courant_warning = false;
    int steps = 0;
    double dt = 0.0;
};

// Right-hand side -d(f)/dx at the n cell centers from point values padded
// with one ghost point per side (length (n+2)*d). Uses the weighted
// slope reconstruction componentwise. Throws if a flux value is not finite.
void semidiscrete_rhs_1d(const std::vector<double>& padded_points, int n,
                         const ConservationLaw1D& law, double h, const CwenoParams& params,
                         std::vector<double>& out);

// One staggered step. An aligned field steps forward onto the +h/2 grid,
// a staggered field steps back onto the aligned grid. For outflow problems
// the staggered cell at the open end is filled by zero-order extrapolation.
CellField1D step_1d(const CellField1D& field, const ConservationLaw1D& law, double dt,
                    const SchemeParams& params, BoundaryCondition bc,
                    StepDiagnostics* diag = nullptr);

// Central-stencil weight of the cell reconstruction, per cell.
std::vector<double> center_weight_field(const CellField1D& field, BoundaryCondition bc,
                                        const CwenoParams& params);

// Advances to time T with an even number of staggered steps of fixed size
// dt = T / (2m), m = ceil(T / (2 lambda h)), so the result returns to the
// original grid and the effective mesh ratio never exceeds lambda.
RunReport1D run_1d(const CellField1D& initial, const ConservationLaw1D& law, double T,
                   double lambda, const SchemeParams& params, BoundaryCondition bc);

}  // namespace cweno
