#include "udw/residue.hpp"

#include <cmath>
#include <numbers>
#include <vector>

#include "udw/errors.hpp"

namespace udw {

namespace {
constexpr double pi = std::numbers::pi;
}

cplx half_line_exp(cplx z, double x) {
    if (x == 0) throw DomainError("half_line_exp: x = 0 diverges");
    if (x < 0) return std::conj(half_line_exp(std::conj(z), -x));
    // substitute t = -i x (k - z): a vertical ray from t0 = i x z downwards.
    // It crosses the cut of Gamma(0, .) when t0 sits in the second quadrant.
    cplx t0 = I * x * z;
    cplx r = gamma0_scaled(t0);
    if (z.imag() > 0 && z.real() >= 0) r += 2 * pi * I * std::exp(t0);
    return r;
}

cplx neg_half_line_exp(cplx z, double x) { return -half_line_exp(-z, -x); }

cplx thermal_weight(cplx z, double a) {
    cplx e = -2 * pi * z / a;
    if (e.real() > 0) {
        cplx q = std::exp(-e);
        return -q / (1.0 - q);
    }
    return 1.0 / (1.0 - std::exp(e));
}

cplx thermal_line_exp(cplx z, double x, double a) {
    if (x == 0) throw DomainError("thermal_line_exp: x = 0 diverges");
    // close upward for x > 0 (poles k = i n a, n >= 1), downward otherwise;
    // the pole of W at k = 0 contributes half a residue
    if (x > 0) {
        cplx r = lerch_sum(I * z / a, a * x) - I * a / (2.0 * z);
        if (z.imag() > 0) r += 2 * pi * I * thermal_weight(z, a) * std::exp(I * z * x);
        return r;
    }
    cplx r = lerch_sum(-I * z / a, -a * x) + I * a / (2.0 * z);
    if (z.imag() < 0) r -= 2 * pi * I * thermal_weight(z, a) * std::exp(I * z * x);
    return r;
}

double log_tail_coefficient(const DetectorParams& p, double eta, bool dot) {
    auto k = oscillator_constants(p);
    auto b = kernel_weights(k, dot);
    cplx s = b[0] * std::exp(k.w_plus * eta) + b[1] * std::exp(k.w_minus * eta);
    return std::norm(s) + std::norm(b[0] + b[1]);
}

double half_line_subtracted(const DetectorParams& p, double eta, bool dot, HalfLine side) {
    if (!(eta > 0)) throw DomainError("half_line_subtracted: eta must be > 0");
    auto k = oscillator_constants(p);
    auto b = kernel_weights(k, dot);
    auto w = k.w();

    struct Pole {
        cplx r, z;
    };
    std::vector<Pole> poles;
    cplx osc = 0;
    const bool pos = side == HalfLine::Positive;
    auto H = [&](cplx z, double x) { return pos ? half_line_exp(z, x) : neg_half_line_exp(z, x); };

    // k K K^* = sum_{jl} B_jl [w_j/(k-u_j) + w_l^*/(k-v_l)] (A0 + Ap e^{ik eta} + Am e^{-ik eta})
    for (int j = 0; j < 2; ++j) {
        for (int l = 0; l < 2; ++l) {
            cplx wl = std::conj(w[l]);
            cplx B = b[j] * std::conj(b[l]) / (w[j] + wl);
            cplx u = I * w[j], v = -I * wl;
            cplx A0 = std::exp((w[j] + wl) * eta) + 1.0;
            cplx Ap = -std::exp(w[j] * eta);
            cplx Am = -std::exp(wl * eta);
            poles.push_back({B * A0 * w[j], u});
            poles.push_back({B * A0 * wl, v});
            osc += B * Ap * (w[j] * H(u, eta) + wl * H(v, eta));
            osc += B * Am * (w[j] * H(u, -eta) + wl * H(v, -eta));
        }
    }
    double C = log_tail_coefficient(p, eta, dot);
    poles.push_back({-C / 2, cplx(0, p.Omega)});
    poles.push_back({-C / 2, cplx(0, -p.Omega)});

    // residues now sum to zero, so the ln(cutoff) pieces cancel
    cplx flat = 0;
    for (const auto& q : poles) {
        if (pos)
            flat -= q.r * std::log(-q.z);
        else
            flat += q.r * (std::log(-q.z) + I * pi * (q.z.imag() > 0 ? 1.0 : -1.0));
    }
    cplx total = pos ? flat + osc : -(flat + osc);
    return total.real();
}

}  // namespace udw
