// scheme1d.cpp
#include "cweno/scheme1d.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace cweno {

namespace {

// Pads interior point values with one ghost point per side.
void pad_points(const std::vector<double>& v, int n, int d, BoundaryCondition bc,
                std::vector<double>& padded) {
    padded.resize(static_cast<size_t>(n + 2) * d);
    std::copy(v.begin(), v.end(), padded.begin() + d);
    const double* left_src = (bc.x == BcKind::periodic) ? &v[static_cast<size_t>(n - 1) * d] : &v[0];
    const double* right_src = (bc.x == BcKind::periodic) ? &v[0] : &v[static_cast<size_t>(n - 1) * d];
    for (int r = 0; r < d; ++r) {
        padded[static_cast<size_t>(r)] = left_src[r];
        padded[static_cast<size_t>(n + 1) * d + r] = right_src[r];
    }
}

// Reconstruction polynomials for cells -1..n (one extra cell per side), from a
// width-2 ghost extension. For systems one weight set per cell is shared by
// all components, built from the norm-scaled global indicators.
void reconstruct_range(const CellField1D& ghosted, int n, int d,
                       const std::vector<double>& norms, const CwenoParams& params,
                       std::vector<Poly1D>& polys, std::vector<double>* center_weight) {
    const double h = ghosted.grid.h();
    polys.resize(static_cast<size_t>(n + 2) * d);
    if (center_weight) center_weight->assign(static_cast<size_t>(n), 0.0);
    std::vector<std::array<double, 3>> raw(static_cast<size_t>(d));
    for (int c = -1; c <= n; ++c) {
        int g = c + 2;  // index in the ghosted field
        std::array<double, 3> w;
        if (d == 1) {
            auto is = smoothness_indicators_1d(ghosted.at(g - 1), ghosted.at(g), ghosted.at(g + 1));
            w = nonlinear_weights(is, kIdealWeights1D, params);
        } else {
            for (int r = 0; r < d; ++r)
                raw[static_cast<size_t>(r)] = smoothness_indicators_1d(
                    ghosted.at(g - 1, r), ghosted.at(g, r), ghosted.at(g + 1, r));
            auto is = global_smoothness_indicators(raw, norms);
            w = nonlinear_weights(is, kIdealWeights1D, params);
        }
        for (int r = 0; r < d; ++r)
            polys[static_cast<size_t>(c + 1) * d + r] = combine_candidates(
                ghosted.at(g - 1, r), ghosted.at(g, r), ghosted.at(g + 1, r), h, w);
        if (center_weight && c >= 0 && c < n) (*center_weight)[static_cast<size_t>(c)] = w[1];
    }
}

double max_spectral_radius(const CellField1D& field, const ConservationLaw1D& law) {
    double rho = 0.0;
    for (int j = 0; j < field.grid.n; ++j)
        rho = std::max(rho, law.spectral_radius(&field.values[static_cast<size_t>(j) * field.d]));
    return rho;
}

}  // namespace

void semidiscrete_rhs_1d(const std::vector<double>& padded_points, int n,
                         const ConservationLaw1D& law, double h, const CwenoParams& params,
                         std::vector<double>& out) {
    const int d = law.d;
    std::vector<double> flux(static_cast<size_t>(n + 2) * d);
    for (int p = 0; p < n + 2; ++p) {
        law.flux(&padded_points[static_cast<size_t>(p) * d], &flux[static_cast<size_t>(p) * d]);
        for (int r = 0; r < d; ++r)
            if (!std::isfinite(flux[static_cast<size_t>(p) * d + r]))
                throw std::runtime_error("semidiscrete_rhs_1d: non-finite flux at cell " +
                                         std::to_string(p - 1));
    }
    out.resize(static_cast<size_t>(n) * d);
    for (int j = 0; j < n; ++j) {
        size_t p = static_cast<size_t>(j + 1) * d;
        for (int r = 0; r < d; ++r)
            out[static_cast<size_t>(j) * d + r] = -derivative_at_center(
                flux[p - d + r], flux[p + r], flux[p + d + r], h, params);
    }
}

CellField1D step_1d(const CellField1D& field, const ConservationLaw1D& law, double dt,
                    const SchemeParams& params, BoundaryCondition bc, StepDiagnostics* diag) {
    const int n = field.grid.n;
    const int d = field.d;
    const double h = field.grid.h();
    if (d != law.d) throw std::invalid_argument("step_1d: component count mismatch");
    const bool forward = (field.grid.offset == GridOffset::aligned);

    CellField1D ghosted = extend_with_ghosts(field, bc, 2);
    std::vector<double> norms = (d > 1) ? component_norms(field) : std::vector<double>{};

    std::vector<Poly1D> polys;
    reconstruct_range(ghosted, n, d, norms, params.cweno, polys,
                      diag ? &diag->center_weight : nullptr);

    // Predictor on the reconstructed interior point values.
    std::vector<double> v0(static_cast<size_t>(n) * d);
    for (int j = 0; j < n; ++j)
        for (int r = 0; r < d; ++r)
            v0[static_cast<size_t>(j) * d + r] = polys[static_cast<size_t>(j + 1) * d + r].a0;

    std::vector<double> padded;
    RhsOperator rhs = [&](const std::vector<double>& v, std::vector<double>& dudt) {
        pad_points(v, n, d, bc, padded);
        semidiscrete_rhs_1d(padded, n, law, h, params.cweno, dudt);
    };
    PredictorState pred = nce_predict(v0, rhs, dt);

    // Fluxes at the three Simpson time levels, padded to cells -1..n.
    auto padded_flux = [&](const std::vector<double>& v, std::vector<double>& flx) {
        pad_points(v, n, d, bc, padded);
        flx.resize(static_cast<size_t>(n + 2) * d);
        for (int p = 0; p < n + 2; ++p)
            law.flux(&padded[static_cast<size_t>(p) * d], &flx[static_cast<size_t>(p) * d]);
    };
    std::vector<double> f0, fh, f1;
    padded_flux(v0, f0);
    {
        std::vector<double> vh = pred.value_at(0.5);
        padded_flux(vh, fh);
        std::vector<double> v1 = pred.value_at(1.0);
        padded_flux(v1, f1);
    }

    Grid1D out_grid(n, field.grid.x_left, field.grid.x_right,
                    forward ? GridOffset::staggered : GridOffset::aligned);
    CellField1D out(out_grid, d, field.time + dt);

    // Output cell j spans the two input cells (base+j, base+j+1).
    const int base = forward ? 0 : -1;
    const double simpson = dt / (6.0 * h);
    for (int j = 0; j < n; ++j) {
        int lc = base + j;           // left input cell
        size_t lp = static_cast<size_t>(lc + 1) * d;  // index into polys / padded flux arrays
        size_t rp = lp + d;
        for (int r = 0; r < d; ++r) {
            double mean = staggered_half_average(polys[lp + r], polys[rp + r], h);
            double ft = (f0[lp + r] - f0[rp + r]) + 4.0 * (fh[lp + r] - fh[rp + r]) +
                        (f1[lp + r] - f1[rp + r]);
            out.at(j, r) = mean + simpson * ft;
        }
    }
    if (bc.x == BcKind::outflow) {
        // The staggered cell straddling the open end is not interior; fill it
        // by zero-order extrapolation from its neighbor.
        int dst = forward ? n - 1 : 0;
        int src = forward ? n - 2 : 1;
        for (int r = 0; r < d; ++r) out.at(dst, r) = out.at(src, r);
    }

    for (double x : out.values)
        if (!std::isfinite(x)) throw std::runtime_error("step_1d: non-finite cell average");

    if (diag) {
        diag->max_courant = (dt / h) * max_spectral_radius(field, law);
        diag->courant_exceeded = diag->max_courant > params.courant_max * (1.0 + 1e-12);
        diag->min_u.assign(static_cast<size_t>(d), std::numeric_limits<double>::infinity());
        diag->max_u.assign(static_cast<size_t>(d), -std::numeric_limits<double>::infinity());
        for (int j = 0; j < n; ++j)
            for (int r = 0; r < d; ++r) {
                diag->min_u[static_cast<size_t>(r)] = std::min(diag->min_u[static_cast<size_t>(r)], out.at(j, r));
                diag->max_u[static_cast<size_t>(r)] = std::max(diag->max_u[static_cast<size_t>(r)], out.at(j, r));
            }
    }
    return out;
}

std::vector<double> center_weight_field(const CellField1D& field, BoundaryCondition bc,
                                        const CwenoParams& params) {
    CellField1D ghosted = extend_with_ghosts(field, bc, 2);
    std::vector<double> norms = (field.d > 1) ? component_norms(field) : std::vector<double>{};
    std::vector<Poly1D> polys;
    std::vector<double> wc;
    reconstruct_range(ghosted, field.grid.n, field.d, norms, params, polys, &wc);
    return wc;
}

RunReport1D run_1d(const CellField1D& initial, const ConservationLaw1D& law, double T,
                   double lambda, const SchemeParams& params, BoundaryCondition bc) {
    if (!(T > 0.0)) throw std::invalid_argument("run_1d: final time must be > 0");
    if (!(lambda > 0.0)) throw std::invalid_argument("run_1d: mesh ratio must be > 0");
    if (initial.grid.offset != GridOffset::aligned)
        throw std::invalid_argument("run_1d: initial field must be aligned");

    const double h = initial.grid.h();
    const int m = static_cast<int>(std::ceil(T / (2.0 * lambda * h)));
    const int steps = 2 * m;
    const double dt = T / steps;

    RunReport1D report;
    report.steps = steps;
    report.dt = dt;
    report.initial_courant = (dt / h) * [&] {
        double rho = 0.0;
        for (int j = 0; j < initial.grid.n; ++j)
            rho = std::max(rho, law.spectral_radius(&initial.values[static_cast<size_t>(j) * initial.d]));
        return rho;
    }();
    report.courant_warning = report.initial_courant > params.courant_max * (1.0 + 1e-12);

    CellField1D field = initial;
    StepDiagnostics diag;
    for (int s = 0; s < steps; ++s) {
        field = step_1d(field, law, dt, params, bc, &diag);
        report.max_courant = std::max(report.max_courant, diag.max_courant);
        report.courant_warning = report.courant_warning || diag.courant_exceeded;
    }
    if (!destagger_pair_check(field, initial.grid))
        throw std::logic_error("run_1d: final field is not aligned");

    report.center_weight = center_weight_field(field, bc, params.cweno);
    report.final_field = std::move(field);
    return report;
}

}  // namespace cweno
