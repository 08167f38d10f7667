// test_nce.cpp
#include <doctest.h>

#include <cmath>
#include <random>
#include <stdexcept>

#include "cweno/nce.hpp"

using namespace cweno;

TEST_CASE("dense-output consistency identities") {
    std::mt19937 rng(17);
    std::uniform_real_distribution<double> dist(0.0, 1.0);
    for (int t = 0; t < 10; ++t) {
        double theta = dist(rng);
        auto b = NceTableau::b(theta);
        CHECK(b[0] + b[1] + b[2] == doctest::Approx(theta).epsilon(1e-15));
        CHECK(b[0] * NceTableau::c[0] + b[1] * NceTableau::c[1] + b[2] * NceTableau::c[2] ==
              doctest::Approx(theta * theta / 2.0).epsilon(1e-15));
    }
    auto b1 = NceTableau::b(1.0);
    CHECK(b1[0] == doctest::Approx(1.0 / 6.0).epsilon(1e-15));
    CHECK(b1[1] == doctest::Approx(2.0 / 3.0).epsilon(1e-15));
    CHECK(b1[2] == doctest::Approx(1.0 / 6.0).epsilon(1e-15));
}

TEST_CASE("zero right-hand side is a fixed point") {
    std::vector<double> u0 = {1.0, -2.0, 0.5};
    auto rhs = [](const std::vector<double>& u, std::vector<double>& d) {
        d.assign(u.size(), 0.0);
    };
    auto s = nce_predict(u0, rhs, 0.7);
    for (double theta : {0.0, 0.3, 0.5, 1.0}) {
        auto u = s.value_at(theta);
        for (size_t i = 0; i < u0.size(); ++i) CHECK(u[i] == u0[i]);
    }
}

TEST_CASE("unit source integrates linearly in theta") {
    std::vector<double> u0 = {0.0};
    auto rhs = [](const std::vector<double>& u, std::vector<double>& d) {
        d.assign(u.size(), 1.0);
    };
    auto s = nce_predict(u0, rhs, 1.0);
    CHECK(s.value_at(0.5)[0] == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(s.value_at(1.0)[0] == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("exponential growth matches the explicit three-stage arithmetic") {
    std::vector<double> u0 = {1.0};
    auto rhs = [](const std::vector<double>& u, std::vector<double>& d) { d = u; };
    const double dt = 0.1;
    auto s = nce_predict(u0, rhs, dt);
    // Any third-order step applied to u' = u gives 1 + z + z^2/2 + z^3/6.
    double expect = 1.0 + dt + dt * dt / 2.0 + dt * dt * dt / 6.0;
    double u1 = s.value_at(1.0)[0];
    CHECK(u1 == doctest::Approx(expect).epsilon(1e-15));
    CHECK(std::abs(u1 - std::exp(dt)) < 5e-6);
    CHECK(std::abs(s.value_at(0.5)[0] - std::exp(0.5 * dt)) < 5e-4);
}

TEST_CASE("third-order local accuracy on a nonlinear problem") {
    auto rhs = [](const std::vector<double>& u, std::vector<double>& d) {
        d.resize(1);
        d[0] = u[0] * u[0];
    };
    // u' = u^2, u(0) = 1 has u(t) = 1/(1-t); one-step error scales as dt^4.
    double e_prev = 0.0;
    for (int k = 0; k < 3; ++k) {
        double dt = 0.05 / (1 << k);
        auto s = nce_predict({1.0}, rhs, dt);
        double err = std::abs(s.value_at(1.0)[0] - 1.0 / (1.0 - dt));
        if (k > 0) {
            double ratio = e_prev / err;
            CHECK(ratio > 12.0);  // ~16 for a fourth-order local error
            CHECK(ratio < 20.0);
        }
        e_prev = err;
    }
}

TEST_CASE("non-finite stages are rejected") {
    auto rhs = [](const std::vector<double>& u, std::vector<double>& d) {
        d.assign(u.size(), std::numeric_limits<double>::infinity());
    };
    CHECK_THROWS_AS(nce_predict({1.0}, rhs, 0.1), std::runtime_error);
    auto ok = [](const std::vector<double>& u, std::vector<double>& d) { d = u; };
    CHECK_THROWS_AS(nce_predict({1.0}, ok, 0.0), std::invalid_argument);
}
