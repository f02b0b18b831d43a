#include "udw/model.hpp"

#include <cmath>
#include <numbers>

#include "udw/errors.hpp"

namespace udw {

namespace {

void require_positive(double v, const char* name) {
    if (!(v > 0) || !std::isfinite(v))
        throw NonPositiveInput(std::string(name) + " must be positive and finite");
}

}  // namespace

DetectorParams derive_params(double lambda0, double m0, double hbar, double Omega_r) {
    require_positive(lambda0, "lambda0");
    require_positive(m0, "m0");
    require_positive(hbar, "hbar");
    require_positive(Omega_r, "Omega_r");

    DetectorParams p;
    p.lambda0 = lambda0;
    p.m0 = m0;
    p.hbar = hbar;
    p.Omega_r = Omega_r;
    p.gamma = lambda0 * lambda0 / (8 * std::numbers::pi * m0);
    if (p.gamma >= Omega_r)
        throw OverDamped("gamma >= Omega_r, only the under-damped oscillator is supported");
    // (Or - g)(Or + g) keeps precision when gamma is tiny
    p.Omega = std::sqrt((Omega_r - p.gamma) * (Omega_r + p.gamma));
    return p;
}

DetectorParams params_from_omega(double lambda0, double Omega, double m0, double hbar) {
    require_positive(lambda0, "lambda0");
    require_positive(Omega, "Omega");
    require_positive(m0, "m0");
    double g = lambda0 * lambda0 / (8 * std::numbers::pi * m0);
    DetectorParams p = derive_params(lambda0, m0, hbar, std::hypot(Omega, g));
    p.Omega = Omega;  // avoid the round trip through Omega_r
    return p;
}

double lambda0_for_gamma(double gamma, double m0) {
    require_positive(gamma, "gamma");
    return std::sqrt(8 * std::numbers::pi * m0 * gamma);
}

std::string to_string(ViolationCode c) {
    switch (c) {
        case ViolationCode::PerturbationViolated: return "PerturbationViolated";
        case ViolationCode::AccelerationOutOfRange: return "AccelerationOutOfRange";
        case ViolationCode::Superluminal: return "Superluminal";
        case ViolationCode::OverDamped: return "OverDamped";
        case ViolationCode::NonPositiveInput: return "NonPositiveInput";
    }
    return "Unknown";
}

bool ValidationReport::has_hard() const {
    for (const auto& v : violations)
        if (v.hard) return true;
    return false;
}

ValidationReport validate_params(const DetectorParams& p, const Trajectory& traj) {
    ValidationReport r;
    auto add = [&](ViolationCode c, bool hard, std::string msg, double val) {
        r.violations.push_back({c, hard, std::move(msg), val});
    };

    if (!(p.lambda0 > 0) || !(p.m0 > 0) || !(p.hbar > 0) || !(p.Omega_r > 0))
        add(ViolationCode::NonPositiveInput, true, "lambda0, m0, hbar and Omega_r must be positive",
            p.lambda0);
    if (p.lambda0 >= 1)
        add(ViolationCode::PerturbationViolated, false,
            "lambda0 >= 1, outside the perturbative region", p.lambda0);
    if (p.gamma * p.gamma >= p.Omega_r * p.Omega_r)
        add(ViolationCode::OverDamped, true, "gamma^2 >= Omega_r^2", p.gamma);

    if (auto* u = std::get_if<UniformAcceleration>(&traj)) {
        if (u->a <= 0)
            add(ViolationCode::AccelerationOutOfRange, true, "proper acceleration must be > 0", u->a);
        else if (u->a >= 1)
            add(ViolationCode::AccelerationOutOfRange, false, "proper acceleration should be < 1", u->a);
    } else {
        const auto& in = std::get<Inertial>(traj);
        if (std::abs(in.v) >= 1)
            add(ViolationCode::Superluminal, true, "|v| must be < 1", in.v);
    }
    return r;
}

double lorentz_factor(double v) {
    if (std::abs(v) >= 1) throw DomainError("|v| must be < 1");
    return 1 / std::sqrt((1 - v) * (1 + v));
}

SpacetimePoint trajectory_position(const Trajectory& traj, double tau) {
    if (auto* u = std::get_if<UniformAcceleration>(&traj)) {
        if (!(u->a > 0)) throw DomainError("uniform acceleration needs a > 0");
        double ia = 1 / u->a;
        return {ia * std::sinh(u->a * tau), ia * std::cosh(u->a * tau), 0, 0};
    }
    const auto& in = std::get<Inertial>(traj);
    double gl = lorentz_factor(in.v);
    return {gl * tau, gl * in.v * tau + in.x_a + in.d, 0, 0};
}

RetardedKinematics retarded_kinematics(const SpacetimePoint& x, double a) {
    if (!(a > 0)) throw DomainError("retarded_kinematics needs a > 0");
    double U = x.U(), V = x.V(), rho = x.rho();
    double ia2 = 1 / (a * a);
    if (V == 0) throw UndefinedRetardedTime("V = 0");
    // (-UV + rho^2 + 1/a^2)^2 + 4UV/a^2 rewritten as a sum of squares
    double X = std::hypot(U * V + ia2 - rho * rho, 2 * rho / a);
    double arg = a / (2 * std::abs(V)) * (X - U * V + rho * rho + ia2);
    if (!(arg > 0) || !std::isfinite(arg))
        throw UndefinedRetardedTime("log argument is not positive");
    return {X, -std::log(arg) / a};
}

}  // namespace udw
