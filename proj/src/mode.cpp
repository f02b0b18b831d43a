#include "udw/mode.hpp"

#include <cmath>

#include "udw/errors.hpp"

namespace udw {

OscillatorConstants oscillator_constants(const DetectorParams& p) {
    if (!(p.Omega > 0)) throw OverDamped("Omega must be > 0");
    OscillatorConstants k;
    k.c_plus = 1.0 / (2.0 * I * p.Omega);
    k.c_minus = -k.c_plus;
    k.w_plus = cplx(-p.gamma, p.Omega);
    k.w_minus = cplx(-p.gamma, -p.Omega);
    return k;
}

cplx q_a(const DetectorParams& p, double eta) {
    if (eta < 0) throw DomainError("q_a: eta < 0");
    cplx r = cplx(p.Omega_r, p.gamma) / p.Omega;
    // the two exponentials folded into cos/sin so that q_a(0) is exactly 1
    double th = p.Omega * eta;
    return std::exp(-p.gamma * eta) * (std::cos(th) - I * r * std::sin(th));
}

std::array<cplx, 2> kernel_weights(const OscillatorConstants& k, bool dot) {
    if (!dot) return {k.c_plus, k.c_minus};
    return {k.c_plus * k.w_plus, k.c_minus * k.w_minus};
}

cplx response_kernel(const DetectorParams& p, double kappa, double eta) {
    auto k = oscillator_constants(p);
    cplx drive = std::exp(-I * (kappa * eta));
    cplx s = 0;
    for (int j = 0; j < 2; ++j) s += k.c()[j] * (std::exp(k.w()[j] * eta) - drive) / (k.w()[j] + I * kappa);
    return s;
}

cplx response_kernel_dot(const DetectorParams& p, double kappa, double eta) {
    auto k = oscillator_constants(p);
    cplx drive = std::exp(-I * (kappa * eta));
    cplx s = 0;
    for (int j = 0; j < 2; ++j) {
        cplx w = k.w()[j];
        s += k.c()[j] * (w * std::exp(w * eta) + I * kappa * drive) / (w + I * kappa);
    }
    return s;
}

}  // namespace udw
