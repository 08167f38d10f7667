// laws.cpp
#include "cweno/laws.hpp"

#include <cmath>
#include <stdexcept>

namespace cweno {

namespace {

constexpr double kGamma = 1.4;

void euler_flux_raw(const double* u, double* f) {
    EulerState s{u[0], u[1], u[2], kGamma};
    auto fv = euler_flux(s);
    f[0] = fv[0];
    f[1] = fv[1];
    f[2] = fv[2];
}

double euler_radius_raw(const double* u) {
    return euler_spectral_radius(EulerState{u[0], u[1], u[2], kGamma});
}

}  // namespace

std::array<double, 3> euler_flux(const EulerState& s) {
    if (!(s.rho > 0.0))
        throw std::domain_error("euler_flux: non-positive density " + std::to_string(s.rho));
    double p = s.pressure();
    if (!(p > 0.0))
        throw std::domain_error("euler_flux: non-positive pressure " + std::to_string(p));
    double u = s.velocity();
    return {s.m, s.m * u + p, u * (s.E + p)};
}

double euler_spectral_radius(const EulerState& s) {
    if (!(s.rho > 0.0))
        throw std::domain_error("euler_spectral_radius: non-positive density");
    double p = s.pressure();
    if (!(p >= 0.0))
        throw std::domain_error("euler_spectral_radius: negative pressure");
    return std::abs(s.velocity()) + std::sqrt(s.gamma * p / s.rho);
}

ConservationLaw1D advection_law_1d() {
    ConservationLaw1D law;
    law.d = 1;
    law.flux = +[](const double* u, double* f) { f[0] = u[0]; };
    law.spectral_radius = +[](const double*) { return 1.0; };
    law.name = "advection";
    return law;
}

ConservationLaw1D burgers_law_1d() {
    ConservationLaw1D law;
    law.d = 1;
    law.flux = +[](const double* u, double* f) { f[0] = 0.5 * u[0] * u[0]; };
    law.spectral_radius = +[](const double* u) { return std::abs(u[0]); };
    law.name = "burgers";
    return law;
}

ConservationLaw1D euler_law_1d() {
    ConservationLaw1D law;
    law.d = 3;
    law.flux = euler_flux_raw;
    law.spectral_radius = euler_radius_raw;
    law.name = "euler";
    return law;
}

ConservationLaw2D advection_law_2d() {
    ConservationLaw2D law;
    law.d = 1;
    law.flux_x = +[](const double* u, double, double, double* f) { f[0] = u[0]; };
    law.flux_y = +[](const double* u, double, double, double* g) { g[0] = u[0]; };
    law.spectral_radius_x = +[](const double*, double, double) { return 1.0; };
    law.spectral_radius_y = +[](const double*, double, double) { return 1.0; };
    law.name = "advection2d";
    return law;
}

ConservationLaw2D burgers_law_2d() {
    ConservationLaw2D law;
    law.d = 1;
    law.flux_x = +[](const double* u, double, double, double* f) { f[0] = 0.5 * u[0] * u[0]; };
    law.flux_y = +[](const double* u, double, double, double* g) { g[0] = 0.5 * u[0] * u[0]; };
    law.spectral_radius_x = +[](const double* u, double, double) { return std::abs(u[0]); };
    law.spectral_radius_y = +[](const double* u, double, double) { return std::abs(u[0]); };
    law.name = "burgers2d";
    return law;
}

ConservationLaw2D rotation_law_2d() {
    ConservationLaw2D law;
    law.d = 1;
    law.flux_x = +[](const double* u, double, double y, double* f) { f[0] = -(y - 0.5) * u[0]; };
    law.flux_y = +[](const double* u, double x, double, double* g) { g[0] = (x - 0.5) * u[0]; };
    law.spectral_radius_x = +[](const double*, double, double y) { return std::abs(y - 0.5); };
    law.spectral_radius_y = +[](const double*, double x, double) { return std::abs(x - 0.5); };
    law.name = "rotation2d";
    return law;
}

std::vector<double> component_norms(const CellField1D& field) {
    std::vector<double> norms(static_cast<size_t>(field.d), 0.0);
    for (int j = 0; j < field.grid.n; ++j)
        for (int r = 0; r < field.d; ++r) norms[static_cast<size_t>(r)] += field.at(j, r) * field.at(j, r);
    double h = field.grid.h();
    for (auto& v : norms) v = std::sqrt(v * h);
    return norms;
}

std::vector<double> component_norms(const CellField2D& field) {
    std::vector<double> norms(static_cast<size_t>(field.d), 0.0);
    for (int j = 0; j < field.grid.ny; ++j)
        for (int i = 0; i < field.grid.nx; ++i)
            for (int r = 0; r < field.d; ++r)
                norms[static_cast<size_t>(r)] += field.at(i, j, r) * field.at(i, j, r);
    double area = field.grid.cell_area();
    for (auto& v : norms) v = std::sqrt(v * area);
    return norms;
}

}  // namespace cweno
