#pragma once

#include "udw/model.hpp"

namespace udw {

enum class TailModel { None, InverseSquare };

struct QuadratureConfig {
    double kappa_max = 0;  // 0 selects 400 * max(Omega, gamma, a)
    double abs_tol = 1e-8;
    double rel_tol = 1e-7;
    long max_subdivisions = 100000;
    TailModel tail_model = TailModel::InverseSquare;
};

struct OracleValue {
    double value = 0;
    double error = 0;
};

struct OracleResult {
    double v1 = 0;
    double neg_v2 = 0;
    double total = 0;
    double v1_error = 0;
    double neg_v2_error = 0;
    double error() const { return v1_error + neg_v2_error; }
};

// kappa / (1 - e^{-2 pi kappa / a})
double thermal_factor(double kappa, double a);

// lambda0^2 hbar / (4 pi^2 m0^2), computed from the coupling directly
double oracle_prefactor(const DetectorParams& p);

// v1: thermal weight on the whole line; neg_v2: -int_{-inf}^0 without it.
// Both carry the log subtraction C k/(k^2+Omega^2) on the side where the tail lives.
OracleResult qq_uad_oracle(const DetectorParams& p, double a, double eta, const QuadratureConfig& cfg = {});
OracleResult pp_uad_oracle(const DetectorParams& p, double a, double eta, const QuadratureConfig& cfg = {});

OracleValue qq_inertial_oracle(const DetectorParams& p, double eta, const QuadratureConfig& cfg = {});
OracleValue pp_inertial_oracle(const DetectorParams& p, double eta, const QuadratureConfig& cfg = {});

struct InertialLines {
    OracleValue positive;  // int_0^inf (subtracted)
    OracleValue negative;  // int_{-inf}^0 (subtracted, so the two tails cancel on the full line)
    OracleValue full;      // int over [-kappa_max, kappa_max] of the raw integrand, computed on its own
};

InertialLines inertial_lines(const DetectorParams& p, double eta, bool dot, const QuadratureConfig& cfg = {});

}  // namespace udw
