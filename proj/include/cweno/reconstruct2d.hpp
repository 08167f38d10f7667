// reconstruct2d.hpp
// Compact third-order central WENO reconstruction in two dimensions:
// four one-sided planes plus a centered paraboloid over a 3x3 stencil.
#pragma once

#include <array>

#include "cweno/reconstruct1d.hpp"

namespace cweno {

// Quadratic about the cell center:
// P(x,y) = c00 + c10 X + c01 Y + c11 XY + c20 X^2 + c02 Y^2, X = x-x_i, Y = y-y_j.
struct Poly2D {
    double c00 = 0.0, c10 = 0.0, c01 = 0.0, c11 = 0.0, c20 = 0.0, c02 = 0.0;

    double eval(double X, double Y) const {
        return c00 + c10 * X + c01 * Y + c11 * X * Y + c20 * X * X + c02 * Y * Y;
    }
    double cell_mean(double hx, double hy) const {
        return c00 + c20 * hx * hx / 12.0 + c02 * hy * hy / 12.0;
    }
};

// 3x3 block of cell averages centered on the cell being reconstructed.
struct Stencil3x3 {
    std::array<double, 9> u{};  // row-major, (di, dj) in {-1,0,1}, x fastest
    double hx = 1.0, hy = 1.0;

    double at(int di, int dj) const { return u[static_cast<size_t>((dj + 1) * 3 + (di + 1))]; }
    double& at(int di, int dj) { return u[static_cast<size_t>((dj + 1) * 3 + (di + 1))]; }
};

// Candidate order is (NE, NW, SW, SE, C) throughout.
inline constexpr std::array<double, 5> kIdealWeights2D = {0.125, 0.125, 0.125, 0.125, 0.5};

enum class Quadrant { NE, NW, SW, SE };

// One-sided planes through the cell average with quadrant-upwind slopes.
std::array<Poly2D, 4> fit_corner_planes(const Stencil3x3& s);

// The quadratic interpolating the nine cell averages in the least-squares-free
// compact sense: centered differences with the mean correction.
Poly2D fit_optimal_paraboloid(const Stencil3x3& s);

// Centered candidate: 2*P_opt - (P_NE + P_NW + P_SW + P_SE)/4.
Poly2D central_paraboloid(const Stencil3x3& s);

// Oscillation indicator sum_{|a|=1,2} hx^(2a1-1) hy^(2a2-1) intint (D^a P)^2,
// evaluated in closed form; reduces to the square-cell formula when hx == hy.
double smoothness_indicator_2d(const Poly2D& p, double hx, double hy);

// The five indicators in candidate order (NE, NW, SW, SE, C).
std::array<double, 5> smoothness_indicators_2d(const std::array<Poly2D, 4>& planes,
                                               const Poly2D& central, double hx, double hy);

Poly2D combine_candidates_2d(const std::array<Poly2D, 4>& planes, const Poly2D& central,
                             const std::array<double, 5>& w);

// Full per-cell reconstruction; optionally reports the weights used.
Poly2D reconstruct_cell_2d(const Stencil3x3& s, const CwenoParams& params,
                           std::array<double, 5>* weights_out = nullptr);

// Exact mean of the quadratic over one quarter of its cell.
double quarter_cell_average(const Poly2D& p, Quadrant q, double hx, double hy);

}  // namespace cweno
