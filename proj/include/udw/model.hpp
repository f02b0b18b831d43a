#pragma once

#include <Eigen/Core>
#include <cmath>
#include <string>
#include <variant>
#include <vector>

namespace udw {

struct DetectorParams {
    double lambda0 = 0;
    double m0 = 1;
    double hbar = 1;
    double Omega_r = 0;
    double gamma = 0;  // damping, lambda0^2 / (8 pi m0)
    double Omega = 0;  // sqrt(Omega_r^2 - gamma^2)
};

DetectorParams derive_params(double lambda0, double m0, double hbar, double Omega_r);

// The CLI and the figures are labelled by Omega, so most callers go through here.
DetectorParams params_from_omega(double lambda0, double Omega, double m0 = 1, double hbar = 1);

double lambda0_for_gamma(double gamma, double m0 = 1);

struct UniformAcceleration {
    double a;
};

struct Inertial {
    double v = 0;
    double x_a = 0;
    double d = 0;
};

using Trajectory = std::variant<UniformAcceleration, Inertial>;

// (t, x1, x2, x3)
struct SpacetimePoint {
    Eigen::Vector4d x = Eigen::Vector4d::Zero();

    SpacetimePoint() = default;
    SpacetimePoint(double t, double x1, double x2, double x3) : x(t, x1, x2, x3) {}

    double t() const { return x[0]; }
    double x1() const { return x[1]; }
    double rho() const { return std::hypot(x[2], x[3]); }
    double U() const { return x[0] - x[1]; }
    double V() const { return x[0] + x[1]; }
};

enum class ViolationCode {
    PerturbationViolated,
    AccelerationOutOfRange,
    Superluminal,
    OverDamped,
    NonPositiveInput,
};

std::string to_string(ViolationCode c);

struct Violation {
    ViolationCode code;
    bool hard;  // hard errors stop evaluation, soft ones are warnings
    std::string message;
    double value;
};

struct ValidationReport {
    std::vector<Violation> violations;

    bool ok() const { return violations.empty(); }
    bool has_hard() const;
};

ValidationReport validate_params(const DetectorParams& p, const Trajectory& traj);

double lorentz_factor(double v);

SpacetimePoint trajectory_position(const Trajectory& traj, double tau);

struct RetardedKinematics {
    double X;
    double tau_minus;
};

RetardedKinematics retarded_kinematics(const SpacetimePoint& x, double a);

}  // namespace udw
