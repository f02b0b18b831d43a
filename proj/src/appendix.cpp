#include <cmath>

#include "udw/closed.hpp"
#include "udw/errors.hpp"
#include "udw/mode.hpp"
#include "udw/residue.hpp"

namespace udw {

namespace {

template <class Line>
AppendixTerms assemble(const DetectorParams& p, double tau, double tau2, double tau0, double tau02,
                       Prefactor c, Line line) {
    if (!(tau > tau0) || !(tau2 > tau02)) throw DomainError("appendix terms need tau > tau0 and tau2 > tau02");
    // the e1 and e4 phases need a genuine split
    if (tau0 == tau02 || tau == tau2) throw DomainError("appendix terms need unequal times");

    auto k = oscillator_constants(p);
    auto w = k.w();
    auto cc = k.c();
    const double eta = tau - tau0, eta2 = tau2 - tau02;
    // phases of e1..e4
    const double x[4] = {tau02 - tau0, tau2 - tau0, tau02 - tau, tau2 - tau};

    cplx P[4] = {0, 0, 0, 0};
    for (int j = 0; j < 2; ++j) {
        for (int l = 0; l < 2; ++l) {
            cplx wl = std::conj(w[l]);
            cplx B = cc[j] * std::conj(cc[l]) / (w[j] + wl);
            cplx u = I * w[j], v = -I * wl;
            cplx E[4] = {std::exp(w[j] * eta + wl * eta2), -std::exp(w[j] * eta), -std::exp(wl * eta2), 1.0};
            for (int i = 0; i < 4; ++i) P[i] += B * E[i] * (w[j] * line(u, x[i]) + wl * line(v, x[i]));
        }
    }
    double pref = coupling_prefactor(p, c);
    return {pref * P[0], pref * P[1], pref * P[2], pref * P[3]};
}

}  // namespace

AppendixTerms appendix_terms_uad_v1(const DetectorParams& p, double a, double tau, double tau2,
                                    double tau0, double tau02, Prefactor c) {
    if (!(a > 0) || !(a < 1)) throw DomainError("proper acceleration must lie in (0, 1)");
    return assemble(p, tau, tau2, tau0, tau02, c,
                    [a](cplx z, double x) { return thermal_line_exp(z, x, a); });
}

AppendixTerms appendix_terms_uad_v2(const DetectorParams& p, double tau, double tau2, double tau0,
                                    double tau02, Prefactor c) {
    return assemble(p, tau, tau2, tau0, tau02, c, [](cplx z, double x) { return neg_half_line_exp(z, x); });
}

}  // namespace udw
