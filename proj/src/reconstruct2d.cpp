// reconstruct2d.cpp
#include "cweno/reconstruct2d.hpp"

namespace cweno {

std::array<Poly2D, 4> fit_corner_planes(const Stencil3x3& s) {
    double u0 = s.at(0, 0);
    double se = (s.at(1, 0) - u0) / s.hx;   // east slope
    double sw = (u0 - s.at(-1, 0)) / s.hx;  // west slope
    double sn = (s.at(0, 1) - u0) / s.hy;   // north slope
    double ss = (u0 - s.at(0, -1)) / s.hy;  // south slope
    std::array<Poly2D, 4> planes;           // (NE, NW, SW, SE)
    planes[0] = Poly2D{u0, se, sn, 0.0, 0.0, 0.0};
    planes[1] = Poly2D{u0, sw, sn, 0.0, 0.0, 0.0};
    planes[2] = Poly2D{u0, sw, ss, 0.0, 0.0, 0.0};
    planes[3] = Poly2D{u0, se, ss, 0.0, 0.0, 0.0};
    return planes;
}

Poly2D fit_optimal_paraboloid(const Stencil3x3& s) {
    const double hx = s.hx, hy = s.hy;
    double dxx = (s.at(1, 0) - 2.0 * s.at(0, 0) + s.at(-1, 0)) / (hx * hx);
    double dyy = (s.at(0, 1) - 2.0 * s.at(0, 0) + s.at(0, -1)) / (hy * hy);
    Poly2D p;
    p.c10 = (s.at(1, 0) - s.at(-1, 0)) / (2.0 * hx);
    p.c01 = (s.at(0, 1) - s.at(0, -1)) / (2.0 * hy);
    p.c11 = (s.at(1, 1) + s.at(-1, -1) - s.at(1, -1) - s.at(-1, 1)) / (4.0 * hx * hy);
    p.c20 = 0.5 * dxx;
    p.c02 = 0.5 * dyy;
    // Correction so the mean over the center cell equals the given average.
    p.c00 = s.at(0, 0) - (hx * hx * dxx + hy * hy * dyy) / 24.0;
    return p;
}

Poly2D central_paraboloid(const Stencil3x3& s) {
    // Defined by the ideal-weight identity: 1/8 * (sum of planes) + 1/2 * P_C = P_opt.
    Poly2D opt = fit_optimal_paraboloid(s);
    auto planes = fit_corner_planes(s);
    Poly2D p;
    p.c00 = 2.0 * opt.c00 -
            0.25 * (planes[0].c00 + planes[1].c00 + planes[2].c00 + planes[3].c00);
    p.c10 = 2.0 * opt.c10 -
            0.25 * (planes[0].c10 + planes[1].c10 + planes[2].c10 + planes[3].c10);
    p.c01 = 2.0 * opt.c01 -
            0.25 * (planes[0].c01 + planes[1].c01 + planes[2].c01 + planes[3].c01);
    p.c11 = 2.0 * opt.c11;
    p.c20 = 2.0 * opt.c20;
    p.c02 = 2.0 * opt.c02;
    return p;
}

double smoothness_indicator_2d(const Poly2D& p, double hx, double hy) {
    const double hx2 = hx * hx, hy2 = hy * hy;
    // |a| = 1 terms, cell mean of the squared gradient components:
    //   intint Px^2 = area * (c10^2 + c11^2 hy^2/12 + c20^2 hx^2/3), likewise Py.
    double gx = p.c10 * p.c10 + p.c11 * p.c11 * hy2 / 12.0 + p.c20 * p.c20 * hx2 / 3.0;
    double gy = p.c01 * p.c01 + p.c11 * p.c11 * hx2 / 12.0 + p.c02 * p.c02 * hy2 / 3.0;
    // |a| = 2 terms: Pxx = 2 c20, Pyy = 2 c02, Pxy = c11 are constant.
    double sxx = 4.0 * p.c20 * p.c20;
    double syy = 4.0 * p.c02 * p.c02;
    double sxy = p.c11 * p.c11;
    return hx2 * gx + hy2 * gy + hx2 * hx2 * sxx + hy2 * hy2 * syy + hx2 * hy2 * sxy;
}

std::array<double, 5> smoothness_indicators_2d(const std::array<Poly2D, 4>& planes,
                                               const Poly2D& central, double hx, double hy) {
    std::array<double, 5> is;
    for (int k = 0; k < 4; ++k) is[static_cast<size_t>(k)] = smoothness_indicator_2d(planes[static_cast<size_t>(k)], hx, hy);
    is[4] = smoothness_indicator_2d(central, hx, hy);
    return is;
}

Poly2D combine_candidates_2d(const std::array<Poly2D, 4>& planes, const Poly2D& central,
                             const std::array<double, 5>& w) {
    Poly2D p;
    for (int k = 0; k < 4; ++k) {
        const Poly2D& q = planes[static_cast<size_t>(k)];
        double wk = w[static_cast<size_t>(k)];
        p.c00 += wk * q.c00;
        p.c10 += wk * q.c10;
        p.c01 += wk * q.c01;
    }
    p.c00 += w[4] * central.c00;
    p.c10 += w[4] * central.c10;
    p.c01 += w[4] * central.c01;
    p.c11 = w[4] * central.c11;
    p.c20 = w[4] * central.c20;
    p.c02 = w[4] * central.c02;
    return p;
}

Poly2D reconstruct_cell_2d(const Stencil3x3& s, const CwenoParams& params,
                           std::array<double, 5>* weights_out) {
    auto planes = fit_corner_planes(s);
    Poly2D central = central_paraboloid(s);
    auto is = smoothness_indicators_2d(planes, central, s.hx, s.hy);
    auto w = nonlinear_weights(is, kIdealWeights2D, params);
    if (weights_out) *weights_out = w;
    return combine_candidates_2d(planes, central, w);
}

double quarter_cell_average(const Poly2D& p, Quadrant q, double hx, double hy) {
    double sx = (q == Quadrant::NE || q == Quadrant::SE) ? 1.0 : -1.0;
    double sy = (q == Quadrant::NE || q == Quadrant::NW) ? 1.0 : -1.0;
    // Monomial means over a quarter cell: X -> sx hx/4, Y -> sy hy/4,
    // XY -> sx sy hx hy/16, X^2 -> hx^2/12, Y^2 -> hy^2/12.
    return p.c00 + p.c10 * sx * hx / 4.0 + p.c01 * sy * hy / 4.0 +
           p.c11 * sx * sy * hx * hy / 16.0 + p.c20 * hx * hx / 12.0 + p.c02 * hy * hy / 12.0;
}

}  // namespace cweno
