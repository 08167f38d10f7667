// laws.hpp
// Conservation-law definitions: fluxes, wave speeds, and the shared
// (global) smoothness indicators used for systems.
#pragma once

#include <array>
#include <string>
#include <vector>

#include "cweno/field.hpp"

namespace cweno {

inline constexpr int kMaxComponents = 3;

struct ConservationLaw1D {
    int d = 1;
    void (*flux)(const double* u, double* f) = nullptr;
    double (*spectral_radius)(const double* u) = nullptr;
    std::string name;
};

// 2D fluxes take the evaluation point so variable-coefficient advection fits
// the same interface; constant-coefficient laws ignore it.
struct ConservationLaw2D {
    int d = 1;
    void (*flux_x)(const double* u, double x, double y, double* f) = nullptr;
    void (*flux_y)(const double* u, double x, double y, double* g) = nullptr;
    double (*spectral_radius_x)(const double* u, double x, double y) = nullptr;
    double (*spectral_radius_y)(const double* u, double x, double y) = nullptr;
    std::string name;
};

// Conserved state of the 1D gas-dynamics system.
struct EulerState {
    double rho = 1.0;  // density
    double m = 0.0;    // momentum
    double E = 1.0;    // total energy
    double gamma = 1.4;

    double velocity() const { return m / rho; }
    double pressure() const { return (gamma - 1.0) * (E - 0.5 * m * m / rho); }
};

// (m, rho u^2 + p, u (E + p)); throws on non-positive density or pressure.
std::array<double, 3> euler_flux(const EulerState& s);

// |u| + sqrt(gamma p / rho).
double euler_spectral_radius(const EulerState& s);

ConservationLaw1D advection_law_1d();
ConservationLaw1D burgers_law_1d();
ConservationLaw1D euler_law_1d();  // gamma = 1.4

ConservationLaw2D advection_law_2d();
ConservationLaw2D burgers_law_2d();
// Solid-body rotation about the domain center: (a, b) = (-(y-1/2), x-1/2).
ConservationLaw2D rotation_law_2d();

// Shared indicators for systems: each stencil's indicator is the average of
// the per-component raw indicators scaled by 1/||u_r||_2. Components with a
// vanishing norm are skipped. K is the candidate count (3 in 1D, 5 in 2D).
template <size_t K>
std::array<double, K> global_smoothness_indicators(
    const std::vector<std::array<double, K>>& per_component_is,
    const std::vector<double>& norms) {
    std::array<double, K> out{};
    int counted = 0;
    for (size_t r = 0; r < per_component_is.size(); ++r) {
        if (!(norms[r] > 0.0)) continue;
        ++counted;
        for (size_t k = 0; k < K; ++k) out[k] += per_component_is[r][k] / norms[r];
    }
    if (counted > 0)
        for (size_t k = 0; k < K; ++k) out[k] /= counted;
    return out;
}

// L2 norm of the cell averages of each component, ||u_r||_2 = sqrt(sum_j u_{j,r}^2 * h).
std::vector<double> component_norms(const CellField1D& field);
std::vector<double> component_norms(const CellField2D& field);

}  // namespace cweno
