// nce.cpp
#include "cweno/nce.hpp"

#include <cmath>
#include <stdexcept>

namespace cweno {

namespace {

void check_finite(const std::vector<double>& v, const char* what) {
    for (double x : v)
        if (!std::isfinite(x))
            throw std::runtime_error(std::string("nce_predict: non-finite value in ") + what);
}

}  // namespace

PredictorState nce_predict(const std::vector<double>& u0, const RhsOperator& rhs, double dt) {
    if (!(dt > 0.0)) throw std::invalid_argument("nce_predict: dt must be > 0");
    const size_t m = u0.size();
    PredictorState s;
    s.u0 = u0;
    s.dt = dt;
    s.k1.resize(m);
    s.k2.resize(m);
    s.k3.resize(m);

    std::vector<double> tmp(m);
    rhs(u0, s.k1);
    check_finite(s.k1, "stage 1");
    for (size_t i = 0; i < m; ++i) tmp[i] = u0[i] + 0.5 * dt * s.k1[i];
    rhs(tmp, s.k2);
    check_finite(s.k2, "stage 2");
    for (size_t i = 0; i < m; ++i) tmp[i] = u0[i] + dt * (-s.k1[i] + 2.0 * s.k2[i]);
    rhs(tmp, s.k3);
    check_finite(s.k3, "stage 3");
    return s;
}

}  // namespace cweno
