#pragma once

#include <array>

#include "udw/model.hpp"
#include "udw/special.hpp"

namespace udw {

struct OscillatorConstants {
    cplx c_plus, c_minus;  // +-1/(2 i Omega)
    cplx w_plus, w_minus;  // -gamma +- i Omega

    std::array<cplx, 2> c() const { return {c_plus, c_minus}; }
    std::array<cplx, 2> w() const { return {w_plus, w_minus}; }
};

OscillatorConstants oscillator_constants(const DetectorParams& p);

// intrinsic mode with q_a(0) = 1, q_a'(0) = -i Omega_r
cplx q_a(const DetectorParams& p, double eta);

// sum_j c_j (e^{w_j eta} - e^{-i kappa eta}) / (w_j + i kappa)
cplx response_kernel(const DetectorParams& p, double kappa, double eta);
// its eta derivative
cplx response_kernel_dot(const DetectorParams& p, double kappa, double eta);

// Amplitudes of the kernel written as sum_j b_j (e^{w_j eta} - e^{-i kappa eta})/(w_j + i kappa).
// b_j = c_j for the kernel itself and c_j w_j for its derivative.
std::array<cplx, 2> kernel_weights(const OscillatorConstants& k, bool dot);

}  // namespace udw
