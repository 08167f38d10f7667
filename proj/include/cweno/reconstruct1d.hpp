// reconstruct1d.hpp
// Compact third-order central WENO reconstruction in one dimension.
//
// Per cell, three candidate polynomials are built from the cell averages
// (u_{j-1}, u_j, u_{j+1}): two one-sided linears and a centered parabola
// chosen so that the ideal-weight combination reproduces the unique parabola
// interpolating all three averages. Data-dependent weights switch to the
// one-sided candidates near discontinuities.
#pragma once

#include <array>
#include <cmath>
#include <stdexcept>

namespace cweno {

// Quadratic about the cell center: P(x) = a0 + a1*(x - x_j) + a2*(x - x_j)^2.
struct Poly1D {
    double a0 = 0.0, a1 = 0.0, a2 = 0.0;

    double eval(double dx) const { return a0 + dx * (a1 + dx * a2); }
    double deriv(double dx) const { return a1 + 2.0 * a2 * dx; }
    // Mean over the cell [ -h/2, h/2 ] around the center.
    double cell_mean(double h) const { return a0 + a2 * h * h / 12.0; }
};

enum class Side { left, right };

struct CwenoParams {
    double epsilon = 1e-2;
    int p_exponent = 2;
    // Forces the weights to the ideal constants (linear scheme).
    bool force_ideal = false;

    void validate() const {
        if (!(epsilon > 0.0)) throw std::invalid_argument("CwenoParams: epsilon must be > 0");
        if (p_exponent < 1) throw std::invalid_argument("CwenoParams: p_exponent must be >= 1");
    }
};

// Candidate order is (L, C, R) throughout.
inline constexpr std::array<double, 3> kIdealWeights1D = {0.25, 0.5, 0.25};

struct WeightSet {
    std::array<double, 3> is_values{};  // (IS_L, IS_C, IS_R)
    std::array<double, 3> ideal = kIdealWeights1D;
    std::array<double, 3> weights = kIdealWeights1D;
};

// The parabola whose averages over cells j-1, j, j+1 equal the three inputs.
Poly1D fit_optimal_parabola(double u_m1, double u_0, double u_p1, double h);

// One-sided linear through the cell averages of cell j and its left/right neighbor.
Poly1D fit_one_sided_linear(double u_near, double u_far, Side side, double h);

// Centered parabola: the ideal-weight residual 2*P_opt - (P_L + P_R)/2.
Poly1D central_parabola(double u_m1, double u_0, double u_p1, double h);

// Closed forms of the oscillation indicators sum_{l=1,2} int h^(2l-1) (P^(l))^2 dx
// for the three candidates; the grid spacing cancels. Order (IS_L, IS_C, IS_R).
std::array<double, 3> smoothness_indicators_1d(double u_m1, double u_0, double u_p1);

// w_i = alpha_i / sum alpha_k with alpha_i = C_i / (eps + IS_i)^p.
template <size_t N>
std::array<double, N> nonlinear_weights(const std::array<double, N>& is_values,
                                        const std::array<double, N>& ideal,
                                        const CwenoParams& params) {
    if (params.force_ideal) return ideal;
    std::array<double, N> alpha;
    double sum = 0.0;
    for (size_t i = 0; i < N; ++i) {
        double inv = 1.0 / (params.epsilon + is_values[i]);
        double a = inv;
        for (int k = 1; k < params.p_exponent; ++k) a *= inv;
        alpha[i] = ideal[i] * a;
        sum += alpha[i];
    }
    for (size_t i = 0; i < N; ++i) alpha[i] /= sum;
    return alpha;
}

// Combines the three candidates with the given weights (order L, C, R).
Poly1D combine_candidates(double u_m1, double u_0, double u_p1, double h,
                          const std::array<double, 3>& w);

// Full per-cell reconstruction; optionally reports the weight set used.
Poly1D reconstruct_cell(double u_m1, double u_0, double u_p1, double h,
                        const CwenoParams& params, WeightSet* ws = nullptr);

// Mean of the reconstruction over the staggered cell [x_j, x_{j+1}]:
// right half taken from poly_j, left half from poly_jp1, each about its own center.
inline double staggered_half_average(const Poly1D& pj, const Poly1D& pjp1, double h) {
    return 0.5 * (pj.a0 + pjp1.a0) + (h / 8.0) * (pj.a1 - pjp1.a1) +
           (h * h / 24.0) * (pj.a2 + pjp1.a2);
}

// Weighted one-sided/central slope at the cell center from three point values.
// Uses the same indicator closed forms applied to point values, and the same
// ideal constants; exact for globally linear data regardless of the weights.
double derivative_at_center(double f_m1, double f_0, double f_p1, double h,
                            const CwenoParams& params);

// Same, with externally supplied weights (order L, C, R). Used for systems
// where one weight set drives all components.
inline double derivative_at_center_weighted(double f_m1, double f_0, double f_p1, double h,
                                            const std::array<double, 3>& w) {
    double sl = (f_0 - f_m1) / h;
    double sr = (f_p1 - f_0) / h;
    double sc = (f_p1 - f_m1) / (2.0 * h);
    return w[0] * sl + w[1] * sc + w[2] * sr;
}

}  // namespace cweno
