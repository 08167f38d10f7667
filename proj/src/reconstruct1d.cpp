// reconstruct1d.cpp
#include "cweno/reconstruct1d.hpp"

namespace cweno {

namespace {

void require_positive_h(double h) {
    if (!(h > 0.0)) throw std::invalid_argument("reconstruct1d: cell width must be > 0");
}

}  // namespace

Poly1D fit_optimal_parabola(double u_m1, double u_0, double u_p1, double h) {
    require_positive_h(h);
    double d2 = u_p1 - 2.0 * u_0 + u_m1;
    Poly1D p;
    p.a0 = u_0 - d2 / 24.0;  // point value at the center, corrected for cell averaging
    p.a1 = (u_p1 - u_m1) / (2.0 * h);
    p.a2 = d2 / (2.0 * h * h);
    return p;
}

Poly1D fit_one_sided_linear(double u_near, double u_far, Side side, double h) {
    require_positive_h(h);
    Poly1D p;
    p.a0 = u_near;
    p.a1 = (side == Side::right) ? (u_far - u_near) / h : (u_near - u_far) / h;
    p.a2 = 0.0;
    return p;
}

Poly1D central_parabola(double u_m1, double u_0, double u_p1, double h) {
    require_positive_h(h);
    double d2 = u_p1 - 2.0 * u_0 + u_m1;
    Poly1D p;
    p.a0 = u_0 - d2 / 12.0;
    p.a1 = (u_p1 - u_m1) / (2.0 * h);
    p.a2 = d2 / (h * h);
    return p;
}

std::array<double, 3> smoothness_indicators_1d(double u_m1, double u_0, double u_p1) {
    double dl = u_0 - u_m1;
    double dr = u_p1 - u_0;
    double d2 = u_p1 - 2.0 * u_0 + u_m1;
    double d1 = u_p1 - u_m1;
    double is_c = (13.0 / 3.0) * d2 * d2 + 0.25 * d1 * d1;
    return {dl * dl, is_c, dr * dr};
}

Poly1D combine_candidates(double u_m1, double u_0, double u_p1, double h,
                          const std::array<double, 3>& w) {
    Poly1D pl = fit_one_sided_linear(u_0, u_m1, Side::left, h);
    Poly1D pc = central_parabola(u_m1, u_0, u_p1, h);
    Poly1D pr = fit_one_sided_linear(u_0, u_p1, Side::right, h);
    Poly1D p;
    p.a0 = w[0] * pl.a0 + w[1] * pc.a0 + w[2] * pr.a0;
    p.a1 = w[0] * pl.a1 + w[1] * pc.a1 + w[2] * pr.a1;
    p.a2 = w[1] * pc.a2;
    return p;
}

Poly1D reconstruct_cell(double u_m1, double u_0, double u_p1, double h,
                        const CwenoParams& params, WeightSet* ws) {
    auto is = smoothness_indicators_1d(u_m1, u_0, u_p1);
    auto w = nonlinear_weights(is, kIdealWeights1D, params);
    if (ws) {
        ws->is_values = is;
        ws->ideal = kIdealWeights1D;
        ws->weights = w;
    }
    return combine_candidates(u_m1, u_0, u_p1, h, w);
}

double derivative_at_center(double f_m1, double f_0, double f_p1, double h,
                            const CwenoParams& params) {
    require_positive_h(h);
    auto is = smoothness_indicators_1d(f_m1, f_0, f_p1);
    auto w = nonlinear_weights(is, kIdealWeights1D, params);
    return derivative_at_center_weighted(f_m1, f_0, f_p1, h, w);
}

}  // namespace cweno
