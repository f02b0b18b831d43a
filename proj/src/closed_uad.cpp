#include <cmath>
#include <numbers>

#include "udw/closed.hpp"
#include "udw/errors.hpp"
#include "udw/residue.hpp"

namespace udw {

namespace {

constexpr double pi = std::numbers::pi;

void check_eta(double eta) {
    if (!(eta > 0) || !std::isfinite(eta)) throw DomainError("eta must be > 0");
}

void check_a(double a) {
    if (!(a > 0) || !(a < 1)) throw DomainError("proper acceleration must lie in (0, 1)");
}

double offset(const CorrelatorOptions& o, double v) { return o.include_renorm_offsets ? v : 0.0; }

// shared F / psi / coth structure of both v1 expressions
struct V1Pieces {
    cplx F_plus, F_minus;  // F_{s/a}(e^{-a eta}), F_{-s/a}(e^{-a eta})
    cplx psi_sum;          // psi(1 + s/a) + psi(1 - s/a)
    cplx ipi_coth;         // i pi coth(pi/a (Omega - i gamma))
};

V1Pieces v1_pieces(const DetectorParams& p, double a, double eta) {
    cplx s(p.gamma, p.Omega);
    double z = std::exp(-a * eta);
    V1Pieces v;
    v.F_plus = hyp_f(s / a, z);
    v.F_minus = hyp_f(-s / a, z);
    v.psi_sum = digamma(1.0 + s / a) + digamma(1.0 - s / a);
    v.ipi_coth = I * pi * coth(pi / a * cplx(p.Omega, -p.gamma));
    return v;
}

}  // namespace

double renorm_lambda0(double Omega, double dt) {
    if (dt == 0) throw DomainError("renorm_lambda0: zero separation");
    return -euler_gamma - std::log(Omega * std::abs(dt));
}

double coupling_prefactor(const DetectorParams& p, Prefactor c) {
    double full = 2 * p.hbar * p.gamma / (pi * p.m0);
    return c == Prefactor::MainText ? full : 0.5 * full;
}

cplx qq_uad_v1_complex(const DetectorParams& p, double a, double eta, const CorrelatorOptions& o) {
    check_eta(eta);
    check_a(a);
    const double g = p.gamma, W = p.Omega;
    const cplx s(g, W);
    const cplx iWg = I * W / g;
    auto pc = v1_pieces(p, a, eta);
    const double E = std::exp(-2 * g * eta);
    const cplx em = std::exp(-I * (W * eta)), ep = 1.0 / em;
    const double sn = std::sin(W * eta);

    cplx t = (offset(o, o.offsets.lambda0) - std::log(a / W)) * E * sn * sn;
    t += a / 2 * std::exp(-(g + a) * eta) *
         (pc.F_plus / (s + a) * (-iWg) * em + pc.F_minus / (s - a) * ((1.0 + iWg) * ep - em));
    cplx block = iWg + E * (iWg + 1.0 - em * em);
    cplx block2 = -iWg + E * (iWg + 1.0 - em * em);
    t -= 0.25 * (block * pc.psi_sum - block2 * pc.ipi_coth);
    return coupling_prefactor(p, o.prefactor) / (W * W) * t;
}

double qq_uad_v1(const DetectorParams& p, double a, double eta, const CorrelatorOptions& o) {
    return qq_uad_v1_complex(p, a, eta, o).real();
}

cplx pp_uad_v1_complex(const DetectorParams& p, double a, double eta, const CorrelatorOptions& o) {
    check_eta(eta);
    check_a(a);
    const double g = p.gamma, W = p.Omega;
    const cplx s(g, W);
    const cplx iWg = I * W / g;
    auto pc = v1_pieces(p, a, eta);
    const double E = std::exp(-2 * g * eta);
    const cplx em = std::exp(-I * (W * eta)), ep = 1.0 / em;
    const double sd = W * std::cos(W * eta) - g * std::sin(W * eta);
    const double la = std::log(a / W);

    cplx t = (offset(o, o.offsets.lambda1) - la) * W * W;
    t += (offset(o, o.offsets.lambda0) - la) * E * sd * sd;
    t += a / 2 * s * s * std::exp(-(g + a) * eta) *
         (pc.F_plus / (s + a) * iWg * em + pc.F_minus / (s - a) * ((1.0 - iWg) * ep - em));
    cplx block = iWg + E * (iWg - 1.0 + em * em);
    cplx block2 = -iWg + E * (iWg - 1.0 + em * em);
    t += 0.25 * s * s * (block * pc.psi_sum - block2 * pc.ipi_coth);
    return coupling_prefactor(p, o.prefactor) / (W * W) * t;
}

double pp_uad_v1(const DetectorParams& p, double a, double eta, const CorrelatorOptions& o) {
    return pp_uad_v1_complex(p, a, eta, o).real();
}

namespace {

double qq_v2_published(const DetectorParams& p, double eta, const CorrelatorOptions& o) {
    const double g = p.gamma, W = p.Omega;
    const cplx sp(g, W), sm(g, -W);
    const cplx iWg = I * W / g;
    const double E = std::exp(-2 * g * eta);
    const cplx e2 = std::exp(2.0 * I * (W * eta));
    const cplx A1 = 1.0 - iWg - e2;
    const cplx A2 = 1.0 + iWg - 1.0 / e2;

    // e^{-2 g eta} Gamma(0, -s eta) = e^{-2 g eta} e^{s eta} [e^{-s eta} Gamma(0, -s eta)]
    cplx G1 = std::exp(cplx(-g, -W) * eta) * gamma0_scaled(-sm * eta);
    cplx G2 = std::exp(cplx(-g, W) * eta) * gamma0_scaled(-sp * eta);

    cplx bracket = E * (A1 * (I * pi + 2.0 * plog(sm)) + A2 * (-I * pi - 2.0 * plog(sp))) +
                   A1 * 2.0 * G1 + A2 * 2.0 * G2;
    cplx t = offset(o, o.offsets.lambda0_v2) - bracket / (8 * W * W);
    t -= I / (8 * W * g) *
         (-I * pi - 2.0 * plog(sp / sm) + 2.0 * gamma0(sp * eta) - 2.0 * gamma0(sm * eta));
    return -coupling_prefactor(p, o.prefactor) * t.real();
}

double pp_v2_published(const DetectorParams& p, double eta, const CorrelatorOptions& o) {
    const double g = p.gamma, W = p.Omega;
    const cplx sp(g, W), sm(g, -W);
    const cplx iWg = I * W / g;
    const double E = std::exp(-2 * g * eta);
    const double r2 = g * g + W * W;
    const cplx ep = std::exp(I * (W * eta)), em = 1.0 / ep;
    const double ie = 1 / eta;

    cplx t = offset(o, o.offsets.lambda0_tilde_v2);
    t += E / (8 * W * W) *
         ((r2 * (1.0 - iWg) - sm * sm * ep * ep) * (-I * pi + 2.0 * plog(sm)) +
          (r2 * (1.0 + iWg) - sp * sp * em * em) * (I * pi + 2.0 * plog(sp)));
    t += I * std::exp(-sp * eta) / (4 * W * g) *
         (sm * (-ie + sm * gamma0_scaled(sm * eta)) - sp * (-ie + sp * gamma0_scaled(sp * eta)));
    const cplx mg(-g, W);  // -gamma + i Omega
    cplx left = (sp * em - r2 / g * ep) * (sp * (I * pi * std::exp(-sp * eta) - gamma0_scaled(-sp * eta)) - ie);
    cplx right = (sm * ep - r2 / g * em) * (mg * (I * pi * std::exp(mg * eta) + gamma0_scaled(mg * eta)) - ie);
    t += std::exp(-g * eta) / (4 * W * W) * (left + right);
    t += I / (8 * W * g) * (sm * sm * (2.0 * plog(sm) + I * pi) - sp * sp * (2.0 * plog(sm) + 3.0 * I * pi));
    return -coupling_prefactor(p, o.prefactor) * t.real();
}

}  // namespace

double qq_uad_v2(const DetectorParams& p, double eta, const CorrelatorOptions& o) {
    check_eta(eta);
    if (o.v2_form == V2Form::Published) return qq_v2_published(p, eta, o);
    double P = coupling_prefactor(p, o.prefactor);
    double S2 = log_tail_coefficient(p, eta, false);
    return P * (half_line_subtracted(p, eta, false, HalfLine::Negative) + S2 * offset(o, o.offsets.lambda0_v2));
}

double pp_uad_v2(const DetectorParams& p, double eta, const CorrelatorOptions& o) {
    check_eta(eta);
    if (o.v2_form == V2Form::Published) return pp_v2_published(p, eta, o);
    double P = coupling_prefactor(p, o.prefactor);
    double C = log_tail_coefficient(p, eta, true);
    return P * (half_line_subtracted(p, eta, true, HalfLine::Negative) + C * offset(o, o.offsets.lambda0_tilde_v2));
}

CorrelatorValue qq_uad(const DetectorParams& p, double a, double eta, const CorrelatorOptions& o) {
    CorrelatorValue v;
    v.eta = eta;
    v.v1 = qq_uad_v1(p, a, eta, o);
    v.neg_v2 = qq_uad_v2(p, eta, o);
    v.total = v.v1 + v.neg_v2;
    return v;
}

CorrelatorValue pp_uad(const DetectorParams& p, double a, double eta, const CorrelatorOptions& o) {
    CorrelatorValue v;
    v.eta = eta;
    v.v1 = pp_uad_v1(p, a, eta, o);
    v.neg_v2 = pp_uad_v2(p, eta, o);
    v.total = v.v1 + v.neg_v2;
    return v;
}

}  // namespace udw
