#include <cmath>
#include <random>

#include "doctest.h"
#include "udw/mode.hpp"
#include "udw/special.hpp"

using namespace udw;

TEST_CASE("oscillator constants") {
    auto p = params_from_omega(0.3, 1.0);
    auto k = oscillator_constants(p);
    CHECK(std::abs(k.w_plus - cplx(-0.00358098621957, 1.0)) < 1e-12);
    CHECK(std::abs(k.w_plus + std::conj(k.w_plus) + 2 * p.gamma) < 1e-16);
    CHECK(k.c_plus == -k.c_minus);
    CHECK(k.w_plus.imag() == p.Omega);
    CHECK(std::abs(k.c_plus * 2.0 * I * p.Omega - 1.0) < 1e-15);

    DetectorParams free{};
    free.Omega = free.Omega_r = 1;
    free.gamma = 0;
    auto f = oscillator_constants(free);
    CHECK(f.w_plus == I);
    CHECK(f.w_minus == -I);
}

TEST_CASE("intrinsic mode") {
    auto p = params_from_omega(0.3, 1.0);
    CHECK(q_a(p, 0) == cplx(1));
    for (double h : {1e-2, 1e-3}) {
        // one-sided, second order: eta >= 0 only
        cplx d = (-3.0 * q_a(p, 0) + 4.0 * q_a(p, h) - q_a(p, 2 * h)) / (2 * h);
        CHECK(std::abs(d + I * p.Omega_r) < 2 * h * h);
    }
    // q'' + 2 gamma q' + Omega_r^2 q = 0
    std::mt19937_64 rng(2);
    std::uniform_real_distribution<double> E(1e-3, 50);
    const double h = 1e-4;
    for (int i = 0; i < 100; ++i) {
        double eta = E(rng);
        cplx qm = q_a(p, eta - h), q0 = q_a(p, eta), qp = q_a(p, eta + h);
        cplx res = (qp - 2.0 * q0 + qm) / (h * h) + 2 * p.gamma * (qp - qm) / (2 * h) + p.Omega_r * p.Omega_r * q0;
        CHECK(std::abs(res) <= 1e-5 * p.Omega_r * p.Omega_r);
        double env = std::exp(-p.gamma * eta) * (1 + (p.Omega_r + p.gamma) / p.Omega);
        CHECK(std::abs(q0) <= env);
    }
}

TEST_CASE("response kernel") {
    auto p = params_from_omega(0.1, 1.0);
    CHECK(std::abs(response_kernel(p, 2.7, 1e-12)) < 1e-11);
    CHECK(std::abs(response_kernel_dot(p, 2.7, 1e-12)) < 1e-11);
    for (double h : {1e-3, 1e-4}) {
        cplx fd = (response_kernel(p, 2.7, 3 + h) - response_kernel(p, 2.7, 3 - h)) / (2 * h);
        CHECK(std::abs(fd - response_kernel_dot(p, 2.7, 3)) < 10 * h * h);
    }
    // driven oscillator: K'' + 2 gamma K' + Omega_r^2 K = e^{-i kappa eta}
    std::mt19937_64 rng(4);
    std::uniform_real_distribution<double> Kd(-5, 5), E(0.5, 40);
    for (double lam : {0.1, 0.3}) {
        auto q = params_from_omega(lam, 1.3);
        for (int i = 0; i < 50; ++i) {
            double k = Kd(rng), eta = E(rng), h = 1e-4;
            cplx d1 = response_kernel_dot(q, k, eta);
            cplx d2 = (response_kernel_dot(q, k, eta + h) - response_kernel_dot(q, k, eta - h)) / (2 * h);
            cplx res = d2 + 2 * q.gamma * d1 + q.Omega_r * q.Omega_r * response_kernel(q, k, eta) - std::exp(-I * k * eta);
            CHECK(std::abs(res) <= 1e-6 * (1 + k * k));
        }
    }
}

TEST_CASE("kernel weights reproduce both kernels") {
    auto p = params_from_omega(0.3, 2.3);
    auto k = oscillator_constants(p);
    for (bool dot : {false, true}) {
        auto b = kernel_weights(k, dot);
        for (double kap : {-3.0, 0.2, 5.0}) {
            double eta = 4.2;
            cplx s = 0;
            for (int j = 0; j < 2; ++j)
                s += b[j] * (std::exp(k.w()[j] * eta) - std::exp(-I * kap * eta)) / (k.w()[j] + I * kap);
            cplx ref = dot ? response_kernel_dot(p, kap, eta) : response_kernel(p, kap, eta);
            CHECK(std::abs(s - ref) < 1e-13 * (1 + std::abs(ref)));
        }
    }
}
