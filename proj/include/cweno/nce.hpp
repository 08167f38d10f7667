// nce.hpp
// Third-order Runge-Kutta predictor with a quadratic natural continuous
// extension: one step yields solution values at any intermediate time level,
// used to feed the Simpson quadrature of the fluxes.
#pragma once

#include <functional>
#include <vector>

namespace cweno {

// Kutta's 3-stage third-order method, c = (0, 1/2, 1), b = (1/6, 2/3, 1/6),
// with dense-output polynomials
//   b1(th) = th - 5/6 th^2,  b2(th) = 2/3 th^2,  b3(th) = 1/6 th^2,
// satisfying sum b_i(th) = th, sum b_i(th) c_i = th^2/2, b_i(1) = b_i.
struct NceTableau {
    static constexpr std::array<double, 3> c = {0.0, 0.5, 1.0};
    static std::array<double, 3> b(double theta) {
        double t2 = theta * theta;
        return {theta - (5.0 / 6.0) * t2, (2.0 / 3.0) * t2, (1.0 / 6.0) * t2};
    }
};

using RhsOperator = std::function<void(const std::vector<double>&, std::vector<double>&)>;

// Stage derivatives of one RK step; interpolate with value_at().
struct PredictorState {
    std::vector<double> u0;
    std::vector<double> k1, k2, k3;
    double dt = 0.0;

    // u(theta) = u0 + dt * sum_i b_i(theta) k_i, theta in [0, 1].
    std::vector<double> value_at(double theta) const {
        auto b = NceTableau::b(theta);
        std::vector<double> u(u0.size());
        for (size_t m = 0; m < u0.size(); ++m)
            u[m] = u0[m] + dt * (b[0] * k1[m] + b[1] * k2[m] + b[2] * k3[m]);
        return u;
    }
};

// One RK step for du/dt = rhs(u). Throws on non-finite stage values.
PredictorState nce_predict(const std::vector<double>& u0, const RhsOperator& rhs, double dt);

}  // namespace cweno
