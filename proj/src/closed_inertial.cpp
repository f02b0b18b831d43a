#include <cmath>
#include <numbers>

#include "udw/closed.hpp"
#include "udw/errors.hpp"
#include "udw/residue.hpp"

namespace udw {

namespace {

constexpr double pi = std::numbers::pi;

double offset(const CorrelatorOptions& o, double v) { return o.include_renorm_offsets ? v : 0.0; }

double qq_published(const DetectorParams& p, double eta, const CorrelatorOptions& o) {
    const double g = p.gamma, W = p.Omega;
    const cplx sp(g, W), sm(g, -W);
    const cplx iWg = I * W / g;
    const double E = std::exp(-2 * g * eta);
    const cplx e2 = std::exp(2.0 * I * (W * eta));
    const cplx A1 = 1.0 - iWg - e2;
    const cplx A2 = 1.0 + iWg - 1.0 / e2;
    cplx G1 = std::exp(cplx(-g, -W) * eta) * gamma0_scaled(-sm * eta);  // E Gamma(0, (-g+iW) eta)
    cplx G2 = std::exp(cplx(-g, W) * eta) * gamma0_scaled(-sp * eta);   // E Gamma(0, -(g+iW) eta)

    cplx t = offset(o, o.offsets.lambda0_tilde);
    t += (E * (A1 * (I * pi - 2.0 * plog(sm)) + A2 * (-3.0 * I * pi - 2.0 * plog(sp))) + A1 * G1 + A2 * G2) /
         (8 * W * W);
    t += I / (8 * W * g) *
         (-2.0 * I * pi + 2.0 * plog(sm) - 2.0 * plog(sp) - gamma0(sm * eta) + gamma0(sp * eta));
    return coupling_prefactor(p, o.prefactor) * t.real();
}

double pp_published(const DetectorParams& p, double eta, const CorrelatorOptions& o) {
    const double g = p.gamma, W = p.Omega;
    const cplx sp(g, W), sm(g, -W);
    const cplx iWg = I * W / g;
    const double E = std::exp(-2 * g * eta);
    const double r2 = g * g + W * W;
    const cplx ep = std::exp(I * (W * eta)), em = 1.0 / ep;
    const double ie = 1 / eta;
    const double sn = std::sin(W * eta);

    cplx t = offset(o, o.offsets.lambda0_tilde_v);
    t += E / (8 * W * W) *
         ((sm * r2 / g - sm * sm * ep * ep) * (-I * pi - 2.0 * plog(sm)) +
          (sp * r2 / g - sp * sp * em * em) * (-3.0 * I * pi - 2.0 * plog(sp)));
    t += std::exp(cplx(-g, W) * eta) / (8 * W * W) * (sm - sm * sm / g) *
         (2.0 * ie - 2.0 * sm * gamma0_scaled(sm * eta));
    t += std::exp(cplx(-g, -W) * eta) / (8 * W * W) * (sp - sp * sp / g) *
         (2.0 * ie - 2.0 * sp * gamma0_scaled(sp * eta));
    // e^{-s eta} Gamma(0, -s eta) is the scaled function at -s eta
    cplx left = (-2.0 * I * sn + iWg * ep) *
                (2.0 * sp * ie - 2.0 * sp * sp * (I * pi * std::exp(-sp * eta) - gamma0_scaled(-sp * eta)));
    cplx right = (2.0 * I * sn - iWg * em) *
                 (2.0 * sm * ie + 2.0 * sm * sm * (I * pi * std::exp(-sm * eta) + gamma0_scaled(-sm * eta)));
    t += std::exp(-g * eta) / (8 * W * W) * (left + right);
    t += I / (8 * W * g) * (-sm * sm * (2.0 * plog(sm) - I * pi) + sp * sp * (2.0 * plog(sp) + I * pi));
    return coupling_prefactor(p, o.prefactor) * t.real();
}

}  // namespace

double qq_inertial(const DetectorParams& p, double eta, const CorrelatorOptions& o) {
    if (!(eta > 0) || !std::isfinite(eta)) throw DomainError("eta must be > 0");
    if (o.v2_form == V2Form::Published) return qq_published(p, eta, o);
    double P = coupling_prefactor(p, o.prefactor);
    double S2 = log_tail_coefficient(p, eta, false);
    return P * (half_line_subtracted(p, eta, false, HalfLine::Positive) + S2 * offset(o, o.offsets.lambda0_tilde));
}

double pp_inertial(const DetectorParams& p, double eta, const CorrelatorOptions& o) {
    if (!(eta > 0) || !std::isfinite(eta)) throw DomainError("eta must be > 0");
    if (o.v2_form == V2Form::Published) return pp_published(p, eta, o);
    double P = coupling_prefactor(p, o.prefactor);
    double C = log_tail_coefficient(p, eta, true);
    return P * (half_line_subtracted(p, eta, true, HalfLine::Positive) + C * offset(o, o.offsets.lambda0_tilde_v));
}

}  // namespace udw
