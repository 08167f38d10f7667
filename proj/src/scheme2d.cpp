// scheme2d.cpp
#include "cweno/scheme2d.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace cweno {

namespace {

int wrap(int i, int n) {
    int m = i % n;
    return m < 0 ? m + n : m;
}

// Reconstruction polynomials for cells [-1..nx] x [-1..ny], stored on an
// (nx+2) x (ny+2) array. One weight set per cell; shared across components.
struct Reconstruction2D {
    int nx = 0, ny = 0, d = 1;
    std::vector<Poly2D> polys;  // ((j+1)*(nx+2) + (i+1))*d + r
    std::vector<double> center_weight;  // interior cells only

    const Poly2D& poly(int i, int j, int r) const {
        return polys[(static_cast<size_t>(j + 1) * (nx + 2) + (i + 1)) * d + r];
    }
    Poly2D& poly(int i, int j, int r) {
        return polys[(static_cast<size_t>(j + 1) * (nx + 2) + (i + 1)) * d + r];
    }
};

Reconstruction2D reconstruct_field_2d(const CellField2D& field, BoundaryCondition bc,
                                      const CwenoParams& params, bool want_weights) {
    const int nx = field.grid.nx, ny = field.grid.ny, d = field.d;
    if (d > kMaxComponents)
        throw std::invalid_argument("reconstruct_field_2d: too many components");
    CellField2D g = extend_with_ghosts(field, bc, 2);
    std::vector<double> norms = (d > 1) ? component_norms(field) : std::vector<double>{};

    Reconstruction2D rec;
    rec.nx = nx;
    rec.ny = ny;
    rec.d = d;
    rec.polys.resize(static_cast<size_t>(nx + 2) * (ny + 2) * d);
    if (want_weights) rec.center_weight.assign(static_cast<size_t>(nx) * ny, 0.0);

    Stencil3x3 s;
    s.hx = field.grid.hx();
    s.hy = field.grid.hy();
    std::vector<std::array<double, 5>> raw(static_cast<size_t>(d));
    for (int j = -1; j <= ny; ++j) {
        for (int i = -1; i <= nx; ++i) {
            int gi = i + 2, gj = j + 2;
            std::array<double, 5> w;
            if (d == 1) {
                for (int dj = -1; dj <= 1; ++dj)
                    for (int di = -1; di <= 1; ++di) s.at(di, dj) = g.at(gi + di, gj + dj);
                rec.poly(i, j, 0) = reconstruct_cell_2d(s, params, &w);
            } else {
                std::array<std::array<Poly2D, 4>, kMaxComponents> planes;
                std::array<Poly2D, kMaxComponents> centrals;
                for (int r = 0; r < d; ++r) {
                    for (int dj = -1; dj <= 1; ++dj)
                        for (int di = -1; di <= 1; ++di) s.at(di, dj) = g.at(gi + di, gj + dj, r);
                    planes[static_cast<size_t>(r)] = fit_corner_planes(s);
                    centrals[static_cast<size_t>(r)] = central_paraboloid(s);
                    raw[static_cast<size_t>(r)] = smoothness_indicators_2d(
                        planes[static_cast<size_t>(r)], centrals[static_cast<size_t>(r)], s.hx, s.hy);
                }
                auto is = global_smoothness_indicators(raw, norms);
                w = nonlinear_weights(is, kIdealWeights2D, params);
                for (int r = 0; r < d; ++r)
                    rec.poly(i, j, r) = combine_candidates_2d(planes[static_cast<size_t>(r)],
                                                              centrals[static_cast<size_t>(r)], w);
            }
            if (want_weights && i >= 0 && i < nx && j >= 0 && j < ny)
                rec.center_weight[static_cast<size_t>(j) * nx + i] = w[4];
        }
    }
    return rec;
}

// Half-edge Gauss offsets: nodes at +-h/4 -+ h/(4 sqrt(3)) from the center line.
struct OffsetClass {
    double ox, oy;
};

std::array<OffsetClass, 8> offset_classes(double hx, double hy) {
    const double dx = hx / (4.0 * std::sqrt(3.0));
    const double dy = hy / (4.0 * std::sqrt(3.0));
    return {{
        {0.0, hy / 4.0 - dy},   // A0: lower node, upper half of the vertical center line
        {0.0, hy / 4.0 + dy},   // A1
        {0.0, -hy / 4.0 - dy},  // A2: nodes on the lower half
        {0.0, -hy / 4.0 + dy},  // A3
        {hx / 4.0 - dx, 0.0},   // B0: right half of the horizontal center line
        {hx / 4.0 + dx, 0.0},   // B1
        {-hx / 4.0 - dx, 0.0},  // B2: left half
        {-hx / 4.0 + dx, 0.0},  // B3
    }};
}

// The 2D Courant number sums the per-axis contributions: C = dt * max_j
// (rho_x/hx + rho_y/hy). With this convention the reference accuracy tables
// (lambda = 0.425 ~ 0.99 * 3/7) are reproduced; reading lambda as dt/dx
// instead gives errors about 2.6x smaller than the published ones.
double courant_sum_2d(const CellField2D& field, const ConservationLaw2D& law) {
    double smax = 0.0;
    const double hx = field.grid.hx(), hy = field.grid.hy();
    for (int j = 0; j < field.grid.ny; ++j) {
        double y = field.grid.center_y(j);
        for (int i = 0; i < field.grid.nx; ++i) {
            double x = field.grid.center_x(i);
            const double* u = &field.values[field.idx(i, j)];
            smax = std::max(smax, law.spectral_radius_x(u, x, y) / hx +
                                      law.spectral_radius_y(u, x, y) / hy);
        }
    }
    return smax;
}

}  // namespace

CellField2D step_2d(const CellField2D& field, const ConservationLaw2D& law, double dt,
                    const SchemeParams& params, BoundaryCondition bc, StepDiagnostics* diag) {
    if (bc.x != BcKind::periodic || bc.y != BcKind::periodic)
        throw std::invalid_argument("step_2d: only periodic boundaries are supported");
    if (field.grid.offset_x != field.grid.offset_y)
        throw std::invalid_argument("step_2d: mixed staggering is not supported");
    const int nx = field.grid.nx, ny = field.grid.ny, d = field.d;
    if (d != law.d) throw std::invalid_argument("step_2d: component count mismatch");
    const double hx = field.grid.hx(), hy = field.grid.hy();
    const bool forward = (field.grid.offset_x == GridOffset::aligned);
    const size_t cells = static_cast<size_t>(nx) * ny;

    Reconstruction2D rec = reconstruct_field_2d(field, bc, params.cweno, diag != nullptr);
    if (diag) diag->center_weight = rec.center_weight;

    const auto classes = offset_classes(hx, hy);

    // Predict point values on each offset grid at the Simpson time levels.
    // vals[c][theta] has nx*ny*d entries; theta in {0, 1/2, 1}.
    std::array<std::array<std::vector<double>, 3>, 8> vals;
    std::vector<double> padded;  // (nx+2) x (ny+2) x d, one ghost ring
    const size_t prow = static_cast<size_t>(nx + 2);
    std::vector<double> fx(prow * (ny + 2) * d), fy(prow * (ny + 2) * d);

    for (int c = 0; c < 8; ++c) {
        const double ox = classes[static_cast<size_t>(c)].ox, oy = classes[static_cast<size_t>(c)].oy;
        std::vector<double> v0(cells * d);
        for (int j = 0; j < ny; ++j)
            for (int i = 0; i < nx; ++i)
                for (int r = 0; r < d; ++r)
                    v0[(static_cast<size_t>(j) * nx + i) * d + r] = rec.poly(i, j, r).eval(ox, oy);

        RhsOperator rhs = [&](const std::vector<double>& v, std::vector<double>& dudt) {
            // Pad with one periodic ghost ring.
            padded.resize(prow * (ny + 2) * d);
            for (int j = -1; j <= ny; ++j) {
                int sj = wrap(j, ny);
                for (int i = -1; i <= nx; ++i) {
                    int si = wrap(i, nx);
                    for (int r = 0; r < d; ++r)
                        padded[(static_cast<size_t>(j + 1) * prow + (i + 1)) * d + r] =
                            v[(static_cast<size_t>(sj) * nx + si) * d + r];
                }
            }
            // Fluxes at every padded point; ghost positions wrap with the data.
            for (int j = -1; j <= ny; ++j) {
                double y = field.grid.center_y(wrap(j, ny)) + oy;
                for (int i = -1; i <= nx; ++i) {
                    double x = field.grid.center_x(wrap(i, nx)) + ox;
                    size_t p = (static_cast<size_t>(j + 1) * prow + (i + 1)) * d;
                    law.flux_x(&padded[p], x, y, &fx[p]);
                    law.flux_y(&padded[p], x, y, &fy[p]);
                    for (int r = 0; r < d; ++r)
                        if (!std::isfinite(fx[p + r]) || !std::isfinite(fy[p + r]))
                            throw std::runtime_error("step_2d: non-finite flux");
                }
            }
            dudt.resize(cells * d);
            for (int j = 0; j < ny; ++j)
                for (int i = 0; i < nx; ++i) {
                    size_t p = (static_cast<size_t>(j + 1) * prow + (i + 1)) * d;
                    size_t o = (static_cast<size_t>(j) * nx + i) * d;
                    for (int r = 0; r < d; ++r) {
                        double dfdx = derivative_at_center(fx[p - d + r], fx[p + r], fx[p + d + r],
                                                           hx, params.cweno);
                        double dgdy = derivative_at_center(fy[p - prow * d + r], fy[p + r],
                                                           fy[p + prow * d + r], hy, params.cweno);
                        dudt[o + r] = -dfdx - dgdy;
                    }
                }
        };

        PredictorState pred = nce_predict(v0, rhs, dt);
        vals[static_cast<size_t>(c)][1] = pred.value_at(0.5);
        vals[static_cast<size_t>(c)][2] = pred.value_at(1.0);
        vals[static_cast<size_t>(c)][0] = std::move(v0);
    }

    // Edge fluxes per class and time level. A classes carry the x-flux on
    // vertical cell center lines, B classes the y-flux on horizontal ones.
    std::array<std::array<std::vector<double>, 3>, 8> edge_flux;
    for (int c = 0; c < 8; ++c) {
        const double ox = classes[static_cast<size_t>(c)].ox, oy = classes[static_cast<size_t>(c)].oy;
        const bool is_a = c < 4;
        for (int th = 0; th < 3; ++th) {
            const auto& v = vals[static_cast<size_t>(c)][static_cast<size_t>(th)];
            auto& f = edge_flux[static_cast<size_t>(c)][static_cast<size_t>(th)];
            f.resize(cells * d);
            for (int j = 0; j < ny; ++j) {
                double y = field.grid.center_y(j) + oy;
                for (int i = 0; i < nx; ++i) {
                    double x = field.grid.center_x(i) + ox;
                    size_t o = (static_cast<size_t>(j) * nx + i) * d;
                    if (is_a)
                        law.flux_x(&v[o], x, y, &f[o]);
                    else
                        law.flux_y(&v[o], x, y, &f[o]);
                }
            }
        }
    }

    Grid2D out_grid(nx, ny, field.grid.x_left, field.grid.x_right, field.grid.y_left,
                    field.grid.y_right, forward ? GridOffset::staggered : GridOffset::aligned,
                    forward ? GridOffset::staggered : GridOffset::aligned);
    CellField2D out(out_grid, d, field.time + dt);

    const int base = forward ? 0 : -1;
    const double time_scale = dt / (6.0 * hx * hy);
    const auto cls_at = [&](int c, int th, int i, int j, int r) {
        return edge_flux[static_cast<size_t>(c)][static_cast<size_t>(th)]
                        [(static_cast<size_t>(wrap(j, ny)) * nx + wrap(i, nx)) * d + r];
    };

    for (int j = 0; j < ny; ++j) {
        int jj = base + j;
        for (int i = 0; i < nx; ++i) {
            int ii = base + i;
            for (int r = 0; r < d; ++r) {
                double mean =
                    0.25 * (quarter_cell_average(rec.poly(ii, jj, r), Quadrant::NE, hx, hy) +
                            quarter_cell_average(rec.poly(ii + 1, jj, r), Quadrant::NW, hx, hy) +
                            quarter_cell_average(rec.poly(ii, jj + 1, r), Quadrant::SE, hx, hy) +
                            quarter_cell_average(rec.poly(ii + 1, jj + 1, r), Quadrant::SW, hx, hy));
                double simpson = 0.0;
                static constexpr double kTimeW[3] = {1.0, 4.0, 1.0};
                for (int th = 0; th < 3; ++th) {
                    // x-flux line integrals at the left and right staggered edges
                    double yl = cls_at(0, th, ii, jj, r) + cls_at(1, th, ii, jj, r) +
                                cls_at(2, th, ii, jj + 1, r) + cls_at(3, th, ii, jj + 1, r);
                    double yr = cls_at(0, th, ii + 1, jj, r) + cls_at(1, th, ii + 1, jj, r) +
                                cls_at(2, th, ii + 1, jj + 1, r) + cls_at(3, th, ii + 1, jj + 1, r);
                    // y-flux line integrals at the bottom and top staggered edges
                    double xb = cls_at(4, th, ii, jj, r) + cls_at(5, th, ii, jj, r) +
                                cls_at(6, th, ii + 1, jj, r) + cls_at(7, th, ii + 1, jj, r);
                    double xt = cls_at(4, th, ii, jj + 1, r) + cls_at(5, th, ii, jj + 1, r) +
                                cls_at(6, th, ii + 1, jj + 1, r) + cls_at(7, th, ii + 1, jj + 1, r);
                    simpson += kTimeW[th] * ((hy / 4.0) * (yl - yr) + (hx / 4.0) * (xb - xt));
                }
                out.at(i, j, r) = mean + time_scale * simpson;
            }
        }
    }

    for (double x : out.values)
        if (!std::isfinite(x)) throw std::runtime_error("step_2d: non-finite cell average");

    if (diag) {
        diag->max_courant = dt * courant_sum_2d(field, law);
        diag->courant_exceeded = diag->max_courant > params.courant_max * (1.0 + 1e-12);
        diag->min_u.assign(static_cast<size_t>(d), std::numeric_limits<double>::infinity());
        diag->max_u.assign(static_cast<size_t>(d), -std::numeric_limits<double>::infinity());
        for (int j = 0; j < ny; ++j)
            for (int i = 0; i < nx; ++i)
                for (int r = 0; r < d; ++r) {
                    diag->min_u[static_cast<size_t>(r)] =
                        std::min(diag->min_u[static_cast<size_t>(r)], out.at(i, j, r));
                    diag->max_u[static_cast<size_t>(r)] =
                        std::max(diag->max_u[static_cast<size_t>(r)], out.at(i, j, r));
                }
    }
    return out;
}

std::vector<double> center_weight_field(const CellField2D& field, BoundaryCondition bc,
                                        const CwenoParams& params) {
    Reconstruction2D rec = reconstruct_field_2d(field, bc, params, true);
    return rec.center_weight;
}

RunReport2D run_2d(const CellField2D& initial, const ConservationLaw2D& law, double T,
                   double lambda, const SchemeParams& params, BoundaryCondition bc) {
    if (!(T > 0.0)) throw std::invalid_argument("run_2d: final time must be > 0");
    if (!(lambda > 0.0)) throw std::invalid_argument("run_2d: mesh ratio must be > 0");
    if (initial.grid.offset_x != GridOffset::aligned ||
        initial.grid.offset_y != GridOffset::aligned)
        throw std::invalid_argument("run_2d: initial field must be aligned");

    // lambda is the target 2D Courant number; pick dt so dt * max_j
    // (rho_x/hx + rho_y/hy) <= lambda on the initial data.
    const double smax = courant_sum_2d(initial, law);
    const double h = std::min(initial.grid.hx(), initial.grid.hy());
    const int m = (smax > 0.0)
                      ? static_cast<int>(std::ceil(T * smax / (2.0 * lambda)))
                      : static_cast<int>(std::ceil(T / (2.0 * lambda * h)));
    const int steps = 2 * m;
    const double dt = T / steps;

    RunReport2D report;
    report.steps = steps;
    report.dt = dt;
    report.initial_courant = dt * smax;
    report.courant_warning = report.initial_courant > params.courant_max * (1.0 + 1e-12);

    CellField2D field = initial;
    StepDiagnostics diag;
    for (int s = 0; s < steps; ++s) {
        field = step_2d(field, law, dt, params, bc, &diag);
        report.max_courant = std::max(report.max_courant, diag.max_courant);
        report.courant_warning = report.courant_warning || diag.courant_exceeded;
    }
    if (!destagger_pair_check(field, initial.grid))
        throw std::logic_error("run_2d: final field is not aligned");

    report.center_weight = center_weight_field(field, bc, params.cweno);
    report.final_field = std::move(field);
    return report;
}

}  // namespace cweno
