// scheme2d.hpp
// Staggered central evolution in 2D. The staggered cell average is assembled
// from four quarter-cell means of the reconstructions; the edge flux
// integrals use two-point Gauss nodes per half-edge (so no node touches a
// cell interface) and Simpson's rule in time, fed by Runge-Kutta dense-output
// point values on eight per-cell offset grids.
#pragma once

#include "cweno/field.hpp"
#include "cweno/laws.hpp"
#include "cweno/reconstruct2d.hpp"
#include "cweno/scheme1d.hpp"

namespace cweno {

struct RunReport2D {
    CellField2D final_field;
    std::vector<double> center_weight;  // per cell, w_C at the final time
    double initial_courant = 0.0;
    double max_courant = 0.0;
    bool courant_warning = false;
    int steps = 0;
    double dt = 0.0;
};

// One staggered step (both axes shift together). Periodic boundaries only.
CellField2D step_2d(const CellField2D& field, const ConservationLaw2D& law, double dt,
                    const SchemeParams& params, BoundaryCondition bc,
                    StepDiagnostics* diag = nullptr);

std::vector<double> center_weight_field(const CellField2D& field, BoundaryCondition bc,
                                        const CwenoParams& params);

// Fixed-step driver, even step count. lambda is the target 2D Courant number
// C = dt * max_j (rho_x/hx + rho_y/hy), evaluated on the initial data.
RunReport2D run_2d(const CellField2D& initial, const ConservationLaw2D& law, double T,
                   double lambda, const SchemeParams& params, BoundaryCondition bc);

}  // namespace cweno
